// Command-line front end. Reports go to stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "eiq/document.hpp"
#include "eiq/error.hpp"
#include "eiq/freecover.hpp"
#include "eiq/morita.hpp"
#include "eiq/oracle.hpp"
#include "eiq/quiveralg.hpp"
#include "eiq/random_category.hpp"
#include "eiq/reptype.hpp"

namespace {

using eiq::json;

enum Exit { kOk = 0, kInvariant = 1, kValidation = 2, kIoSchema = 3, kMismatch = 4 };

struct Config {
  std::string input;
  std::optional<long long> prime;
  std::string format = "json";
  std::size_t max_paths = eiq::kDefaultMaxPaths;
  std::size_t max_group = eiq::kDefaultGroupBound;
  std::uint64_t seed = 1;
  std::string rep;
  bool inverse = false;
  std::size_t objects = 4;
  bool non_free = false;
};

eiq::EICategory load(const Config& cfg) {
  return eiq::load_category(eiq::read_json_file(cfg.input), {cfg.max_group, cfg.max_paths});
}

eiq::CharTableCache tables_for(const eiq::EICategory& cat, const Config& cfg) {
  std::vector<eiq::GroupPtr> groups;
  for (std::size_t x = 0; x < cat.object_count(); ++x) groups.push_back(cat.group(x));
  if (cfg.prime) return eiq::CharTableCache(eiq::certify_prime(*cfg.prime, groups));
  return eiq::CharTableCache(eiq::choose_splitting_prime(groups));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const Config& cfg) {
  try {
    const auto cat = load(cfg);
    emit({{"valid", true}, {"objects", cat.object_count()}, {"morphisms", cat.morphism_count()}});
    return kOk;
  } catch (const eiq::Error& e) {
    if (e.kind() != eiq::ErrorKind::Validation) throw;
    emit(eiq::findings_to_json(e));
    return kValidation;
  }
}

int cmd_quiver(const Config& cfg) {
  const auto cat = load(cfg);
  auto tables = tables_for(cat, cfg);
  const auto q = eiq::build_quiver(cat, tables);
  eiq::assert_acyclic(q, cat);
  if (cfg.format == "dot") {
    std::cout << eiq::quiver_to_dot(q);
  } else if (cfg.format == "text") {
    std::cout << eiq::quiver_to_text(q);
  } else {
    json doc = eiq::quiver_to_json(q);
    doc["p"] = tables.prime().p();
    emit(doc);
  }
  return kOk;
}

int cmd_classify(const Config& cfg) {
  const auto cat = load(cfg);
  auto tables = tables_for(cat, cfg);
  const auto q = eiq::build_quiver(cat, tables);
  const auto v = eiq::rep_type(cat, tables);
  if (cfg.format == "text") {
    std::cout << eiq::to_string(v.verdict);
    for (const auto& c : v.certificates) std::cout << "\n  " << c.rule << ": " << c.witness;
    std::cout << "\n";
  } else {
    json doc = eiq::verdict_to_json(v, cat, &q);
    doc["p"] = tables.prime().p();
    emit(doc);
  }
  return kOk;
}

int cmd_screen(const Config& cfg) {
  const auto cat = load(cfg);
  auto tables = tables_for(cat, cfg);
  emit({{"certificates", eiq::certificates_to_json(eiq::screen_two_object(cat, tables), cat)}});
  return kOk;
}

int cmd_cover(const Config& cfg) {
  const auto cat = load(cfg);
  const auto cover = eiq::free_cover(cat, cfg.max_paths);
  emit({{"summary", eiq::cover_summary_to_json(eiq::is_free(cat, cfg.max_paths), cat)},
        {"cover", eiq::category_to_json(cover)}});
  return kOk;
}

int cmd_is_free(const Config& cfg) {
  const auto cat = load(cfg);
  const auto summary = eiq::is_free(cat, cfg.max_paths);
  const auto ufp = eiq::ufp_oracle(cat);
  if (cfg.format == "text") {
    std::cout << (summary.is_free ? "free" : "not free") << "\n";
  } else {
    json doc = eiq::cover_summary_to_json(summary, cat);
    doc["ufp"] = ufp.holds;
    if (!ufp.holds) doc["ufp_witness"] = ufp.witness;
    emit(doc);
  }
  if (summary.is_free != ufp.holds) {
    std::cerr << "eiq: freeness decision and UFP enumeration disagree\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_oracle(const Config& cfg) {
  const auto cat = load(cfg);
  auto tables = tables_for(cat, cfg);
  const auto q = eiq::build_quiver(cat, tables);
  const auto built = eiq::multiplicities(q);
  const auto oracle = eiq::ext_quiver_oracle(cat, tables);
  const eiq::StructureConstantAlgebra algebra(cat);
  const auto rad = eiq::radical_data(algebra, cat, tables.field());
  const bool match = built == oracle;
  emit({{"p", tables.prime().p()},
        {"match", match},
        {"oracle", eiq::multiplicities_to_json(oracle, q)},
        {"quiver", eiq::multiplicities_to_json(built, q)},
        {"algebra_dim", algebra.dimension()},
        {"radical", eiq::radical_to_json(rad)}});
  if (!match) {
    std::cerr << "eiq: oracle multiplicities differ from the constructed quiver\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_functor(const Config& cfg) {
  const auto cat = load(cfg);
  auto tables = tables_for(cat, cfg);
  const eiq::MoritaContext ctx(cat, tables);
  const json rep = eiq::read_json_file(cfg.rep);
  if (cfg.inverse) {
    emit(eiq::cat_rep_to_json(ctx.inverse(eiq::load_quiver_rep(rep, ctx)), ctx));
    return kOk;
  }
  const auto r = eiq::load_cat_rep(rep, ctx);
  try {
    ctx.verify(r);
  } catch (const eiq::Error& e) {
    if (e.kind() != eiq::ErrorKind::Validation) throw;
    emit(eiq::findings_to_json(e));
    return kValidation;
  }
  emit(eiq::quiver_rep_to_json(ctx.on_morphisms(r), ctx));
  return kOk;
}

int cmd_random(const Config& cfg) {
  eiq::Rng rng(cfg.seed);
  eiq::RandomCategoryOptions opts;
  opts.max_objects = cfg.objects;
  const auto cat = cfg.non_free ? eiq::random_non_free_category(rng, opts) : eiq::random_free_category(rng, opts);
  emit(eiq::category_to_json(cat));
  return kOk;
}

int exit_code(eiq::ErrorKind kind) {
  switch (kind) {
    case eiq::ErrorKind::Invariant: return kInvariant;
    case eiq::ErrorKind::Validation:
    case eiq::ErrorKind::SizeLimit:
    case eiq::ErrorKind::Precondition: return kValidation;
    case eiq::ErrorKind::Schema:
    case eiq::ErrorKind::Io: return kIoSchema;
  }
  return kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eiq: ordinary quivers and representation type of finite EI category algebras"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", cfg.input, "category document (JSON)")->required();
    sub->add_option("--prime", cfg.prime, "splitting prime (checked against every group)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--max-paths", cfg.max_paths, "bound on enumerated quiver paths");
    sub->add_option("--max-group", cfg.max_group, "bound on group orders");
    sub->add_option("--seed", cfg.seed, "seed for randomized commands");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const std::vector<Command> commands = {
      {"validate", "load and validate a category", cmd_validate},
      {"quiver", "ordinary quiver of the category algebra", cmd_quiver},
      {"classify", "representation type", cmd_classify},
      {"screen", "two-object infinite-type screens", cmd_screen},
      {"cover", "free EI cover and hom-set comparison", cmd_cover},
      {"is-free", "freeness decision cross-checked by UFP enumeration", cmd_is_free},
      {"oracle", "structure-constant cross-check of the quiver", cmd_oracle},
      {"functor", "apply the functor to a representation file", cmd_functor},
      {"random", "emit a seeded random category", cmd_random},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Config&)>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    const bool random = std::string(c.name) == "random";
    common(sub, !random);
    if (std::string(c.name) == "functor") {
      sub->add_option("--rep", cfg.rep, "representation document")->required();
      sub->add_flag("--inverse", cfg.inverse, "the file holds a quiver representation; build the category representation");
    }
    if (random) {
      sub->add_option("--objects", cfg.objects, "maximum number of objects")->check(CLI::Range(1, 8));
      sub->add_flag("--non-free", cfg.non_free, "identify two composites to break freeness");
    }
    subs.emplace_back(sub, c.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kIoSchema;
  }

  try {
    for (const auto& [sub, run] : subs) {
      if (sub->parsed()) return run(cfg);
    }
  } catch (const eiq::Error& e) {
    std::cerr << "eiq: " << e.what() << "\n";
    for (std::size_t i = 1; i < e.findings().size(); ++i) {
      std::cerr << "  " << e.findings()[i].code << ": " << e.findings()[i].message << "\n";
    }
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "eiq: malformed document: " << e.what() << "\n";
    return kIoSchema;
  }
  return kOk;
}
