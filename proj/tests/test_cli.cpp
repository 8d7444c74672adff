#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Result eiq(const std::string& args) {
  const std::string cmd = std::string("\"") + EIQ_CLI + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fx(const std::string& name) { return std::string("\"") + EIQ_FIXTURE_DIR + "/" + name + "\""; }

json parse(const Result& r) {
  json j;
  EXPECT_NO_THROW(j = json::parse(r.out)) << r.out;
  return j;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("eiq_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(Cli, ValidateExitCodes) {
  const Result ok = eiq("validate " + fx("example_4_4.json"));
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(parse(ok).at("morphisms"), 14);

  const Result bad = eiq("validate " + fx("bad_skeletal.json"));
  EXPECT_EQ(bad.status, 2);
  const json findings = parse(bad);
  EXPECT_EQ(findings.at("valid"), false);
  EXPECT_EQ(findings.at("findings").at(0).at("code"), "hom-both-directions");

  EXPECT_EQ(eiq("validate " + fx("bad_assoc.json")).status, 2);
  EXPECT_EQ(eiq("validate " + fx("malformed.json")).status, 3);
  EXPECT_EQ(eiq("validate " + fx("no_such_file.json")).status, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(eiq("").status, 3);
  EXPECT_EQ(eiq("quiver").status, 3);
  EXPECT_EQ(eiq("quiver " + fx("example_4_4.json") + " --format svg").status, 3);
  EXPECT_EQ(eiq("--help").status, 0);
}

TEST(Cli, Quiver) {
  const Result r = eiq("quiver " + fx("example_4_3.json"));
  ASSERT_EQ(r.status, 0);
  const json q = parse(r);
  EXPECT_EQ(q.at("vertices").size(), 11u);
  EXPECT_EQ(q.at("arrows").size(), 6u);
  EXPECT_EQ(q.at("p"), 13);

  const Result dot = eiq("quiver " + fx("example_6_6.json") + " --format dot");
  ASSERT_EQ(dot.status, 0);
  const std::string edge = "\"x:X0\" -> \"y:X2\";";
  const auto first = dot.out.find(edge);
  ASSERT_NE(first, std::string::npos);
  EXPECT_NE(dot.out.find(edge, first + 1), std::string::npos);

  const Result text = eiq("quiver " + fx("example_4_4.json") + " --format text");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("y:X2"), std::string::npos);
}

TEST(Cli, PrimeOption) {
  EXPECT_EQ(eiq("quiver " + fx("example_4_4.json") + " --prime 7").status, 2);
  EXPECT_EQ(eiq("quiver " + fx("example_4_4.json") + " --prime 15").status, 2);
  const Result r = eiq("quiver " + fx("example_4_4.json") + " --prime 19");
  ASSERT_EQ(r.status, 0);
  const json q = parse(r);
  EXPECT_EQ(q.at("p"), 19);
  EXPECT_EQ(q.at("vertices").size(), 5u);
}

TEST(Cli, Classify) {
  const Result text = eiq("classify " + fx("example_4_4.json") + " --format text");
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("Finite"), std::string::npos);
  EXPECT_NE(text.out.find("hereditary + Dynkin A5"), std::string::npos);
  const json wild = parse(eiq("classify " + fx("example_6_6.json")));
  EXPECT_EQ(wild.at("verdict"), "Wild");
  const json uncertified = parse(eiq("classify " + fx("example_2_11_minus_g.json")));
  EXPECT_EQ(uncertified.at("verdict"), "InfiniteUncertified");
}

TEST(Cli, ScreenCoverAndFreeness) {
  const json screen = parse(eiq("screen " + fx("example_2_11_minus_g.json")));
  ASSERT_FALSE(screen.at("certificates").empty());
  EXPECT_EQ(screen.at("certificates").at(0).at("rule"), "multiple-orbits");

  const Result nf = eiq("is-free " + fx("example_2_11_minus_g.json"));
  EXPECT_EQ(nf.status, 0);
  const json j = parse(nf);
  EXPECT_EQ(j.at("is_free"), false);
  EXPECT_EQ(j.at("ufp"), false);
  EXPECT_EQ(eiq("is-free " + fx("example_4_3.json") + " --format text").out, "free\n");

  const Result cover = eiq("cover " + fx("example_2_10_minus_beta.json"));
  ASSERT_EQ(cover.status, 0);
  const json c = parse(cover);
  EXPECT_EQ(c.at("summary").at("is_free"), false);
  // The emitted cover is itself a loadable, free category.
  const auto path = temp_file("cover.json", c.at("cover").dump());
  const json again = parse(eiq("is-free \"" + path.string() + "\""));
  EXPECT_EQ(again.at("is_free"), true);
  std::filesystem::remove(path);
}

TEST(Cli, Oracle) {
  const Result r = eiq("oracle " + fx("example_4_3.json"));
  ASSERT_EQ(r.status, 0);
  const json j = parse(r);
  EXPECT_EQ(j.at("match"), true);
  EXPECT_EQ(j.at("radical").at("quotient_dim"), 9);
}

TEST(Cli, FunctorAndInverse) {
  const Result r = eiq("functor " + fx("example_4_4.json") + " --rep " + fx("example_7_3_rep.json"));
  ASSERT_EQ(r.status, 0);
  const json q = parse(r);
  std::map<std::string, std::pair<std::size_t, std::size_t>> shapes;
  for (const auto& a : q.at("arrows")) {
    const auto& m = a.at("matrix");
    shapes[a.at("source").get<std::string>() + " -> " + a.at("target").get<std::string>()] = {
        m.size(), m.empty() ? 0 : m.at(0).size()};
  }
  EXPECT_EQ(shapes.at("x:X0 -> y:X0"), std::make_pair(std::size_t{1}, std::size_t{2}));
  EXPECT_EQ(shapes.at("x:X0 -> y:X2"), std::make_pair(std::size_t{2}, std::size_t{2}));
  EXPECT_EQ(shapes.at("x:X1 -> y:X1"), std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_EQ(shapes.at("x:X1 -> y:X2"), std::make_pair(std::size_t{2}, std::size_t{1}));

  // Back to a category representation and forward again reproduces the quiver representation.
  const auto qpath = temp_file("qrep.json", r.out);
  const Result inv = eiq("functor " + fx("example_4_4.json") + " --inverse --rep \"" + qpath.string() + "\"");
  ASSERT_EQ(inv.status, 0);
  const auto cpath = temp_file("crep.json", inv.out);
  const Result fwd = eiq("functor " + fx("example_4_4.json") + " --rep \"" + cpath.string() + "\"");
  EXPECT_EQ(fwd.status, 0);
  EXPECT_EQ(parse(fwd), q);
  std::filesystem::remove(qpath);
  std::filesystem::remove(cpath);

  EXPECT_EQ(eiq("functor " + fx("example_4_4.json")).status, 3);
  EXPECT_EQ(eiq("functor " + fx("example_2_11_minus_g.json") + " --rep " + fx("example_7_3_rep.json")).status, 2);
}

TEST(Cli, OutputsAreDeterministic) {
  for (const std::string& args :
       {"quiver " + fx("example_4_3.json"), "classify " + fx("example_6_6.json"), "oracle " + fx("example_4_4.json"),
        "cover " + fx("example_2_11_minus_g.json"), std::string("random --seed 9 --objects 4")}) {
    SCOPED_TRACE(args);
    const Result a = eiq(args), b = eiq(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    parse(a);
  }
}

TEST(Cli, RandomCategoriesValidate) {
  for (int seed = 1; seed <= 5; ++seed) {
    for (const char* extra : {"", " --non-free"}) {
      const Result r = eiq("random --seed " + std::to_string(seed) + " --objects 4" + extra);
      ASSERT_EQ(r.status, 0);
      const auto path = temp_file("random.json", r.out);
      const Result v = eiq("validate \"" + path.string() + "\"");
      EXPECT_EQ(v.status, 0);
      const json f = parse(eiq("is-free \"" + path.string() + "\""));
      EXPECT_EQ(f.at("is_free"), std::string(extra).empty());
      std::filesystem::remove(path);
    }
  }
  EXPECT_NE(eiq("random --seed 1").out, eiq("random --seed 2").out);
  EXPECT_EQ(eiq("random --objects 9").status, 3);
}
