#include "eiq/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "eiq/error.hpp"

namespace eiq {

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorKind::Schema, msg); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::size_t as_size(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::uint32_t> as_images(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of integers");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) out.push_back(static_cast<std::uint32_t>(as_size(v, where)));
  return out;
}

std::vector<std::vector<std::uint32_t>> as_image_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of image lists");
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& v : j) out.push_back(as_images(v, where));
  return out;
}

std::vector<ObjectData> load_objects(const json& doc, const LoadOptions& opts, std::map<std::string, std::size_t>& index) {
  const json& objs = field(doc, "objects", "document");
  if (!objs.is_array() || objs.empty()) schema("\"objects\" must be a nonempty array");
  std::vector<ObjectData> out;
  std::vector<Finding> dup;
  for (const auto& o : objs) {
    const json& idj = field(o, "id", "object");
    if (!idj.is_string()) schema("object id must be a string");
    const std::string id = idj.get<std::string>();
    const std::string where = "object " + id;
    const std::size_t degree = as_size(field(o, "degree", where), where + " degree");
    if (degree == 0) schema(where + ": degree must be positive");
    std::vector<Permutation> gens;
    if (o.contains("generators")) {
      for (auto& img : as_image_list(o.at("generators"), where + " generators")) {
        if (img.size() != degree) {
          throw Error(ErrorKind::Validation,
                      std::vector<Finding>{{"bad-permutation", where + ": generator has length " +
                                                                    std::to_string(img.size()) + ", expected " +
                                                                    std::to_string(degree)}});
        }
        try {
          gens.emplace_back(std::move(img));
        } catch (const Error& e) {
          throw Error(ErrorKind::Validation, std::vector<Finding>{{"bad-permutation", where + ": " + e.what()}});
        }
      }
    }
    if (index.contains(id)) {
      dup.push_back({"duplicate-object", "object id " + id + " appears twice"});
      continue;
    }
    index[id] = out.size();
    out.push_back({id, PermGroup::generate(degree, std::move(gens), opts.max_group)});
  }
  if (!dup.empty()) throw Error(ErrorKind::Validation, dup);
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + ": object reference must be a string id");
  auto it = index.find(j.get<std::string>());
  if (it == index.end()) {
    throw Error(ErrorKind::Validation, std::vector<Finding>{{"unknown-object", where + ": no object " + j.get<std::string>()}});
  }
  return it->second;
}

HomData load_hom(const json& h, const std::map<std::string, std::size_t>& index) {
  HomData d;
  d.from = lookup(index, field(h, "from", "hom"), "hom");
  d.to = lookup(index, field(h, "to", "hom"), "hom");
  const std::string where = "hom " + field(h, "from", "hom").get<std::string>() + "->" + h.at("to").get<std::string>();
  d.size = as_size(field(h, "size", where), where + " size");
  if (h.contains("left_action")) d.left_generators = as_image_list(h.at("left_action"), where + " left_action");
  if (h.contains("right_action")) d.right_generators = as_image_list(h.at("right_action"), where + " right_action");
  return d;
}

EICategory load_explicit(const json& doc, const LoadOptions& opts) {
  std::map<std::string, std::size_t> index;
  CategoryData data;
  data.objects = load_objects(doc, opts, index);
  if (doc.contains("homs")) {
    if (!doc.at("homs").is_array()) schema("\"homs\" must be an array");
    for (const auto& h : doc.at("homs")) data.homs.push_back(load_hom(h, index));
  }
  if (doc.contains("compositions")) {
    if (!doc.at("compositions").is_array()) schema("\"compositions\" must be an array");
    for (const auto& c : doc.at("compositions")) {
      const json& outer = field(c, "outer", "composition");
      const json& inner = field(c, "inner", "composition");
      if (!outer.is_array() || outer.size() != 2 || !inner.is_array() || inner.size() != 2) {
        schema("composition: outer and inner must be [from, to] pairs");
      }
      CompositionData cd;
      cd.from = lookup(index, inner[0], "composition");
      cd.mid = lookup(index, inner[1], "composition");
      const std::size_t outer_from = lookup(index, outer[0], "composition");
      cd.to = lookup(index, outer[1], "composition");
      if (outer_from != cd.mid) schema("composition: outer source differs from inner target");
      const json& table = field(c, "table", "composition");
      if (!table.is_array()) schema("composition table must be an array of rows");
      for (const auto& row : table) cd.table.push_back(as_images(row, "composition table"));
      data.compositions.push_back(std::move(cd));
    }
  }
  return EICategory::build(std::move(data));
}

EICategory load_ei_quiver(const json& doc, const LoadOptions& opts) {
  std::map<std::string, std::size_t> index;
  EIQuiverData q;
  for (auto& o : load_objects(doc, opts, index)) {
    q.ids.push_back(o.id);
    q.groups.push_back(o.group);
  }
  const json& arrows = doc.contains("homs") ? doc.at("homs") : field(doc, "arrows", "document");
  if (!arrows.is_array()) schema("arrows must be an array");
  std::vector<Finding> findings;
  for (const auto& a : arrows) {
    const HomData h = load_hom(a, index);
    const std::string where = q.ids[h.from] + "->" + q.ids[h.to];
    EIQuiverArrow arrow;
    arrow.from = h.from;
    arrow.to = h.to;
    arrow.biset.size = h.size;
    const PermGroup& target = *q.groups[h.to];
    const PermGroup& source = *q.groups[h.from];
    if (h.left_generators.size() != target.generator_positions().size() ||
        h.right_generators.size() != source.generator_positions().size()) {
      findings.push_back({"action-shape", "arrow " + where + ": one image list per group generator is required"});
      continue;
    }
    for (const auto* imgs : {&h.left_generators, &h.right_generators}) {
      for (const auto& img : *imgs) {
        if (img.size() != h.size) findings.push_back({"action-shape", "arrow " + where + ": image list has the wrong length"});
      }
    }
    if (!findings.empty()) continue;
    std::string code = expand_action(target, h.left_generators, h.size, true, arrow.biset.left);
    if (code.empty()) code = expand_action(source, h.right_generators, h.size, false, arrow.biset.right);
    if (!code.empty()) {
      findings.push_back({code, "arrow " + where + ": generator images do not define a group action"});
      continue;
    }
    bool commute = true;
    for (std::size_t hh = 0; hh < target.order() && commute; ++hh) {
      for (std::size_t g = 0; g < source.order() && commute; ++g) {
        for (std::size_t i = 0; i < h.size && commute; ++i) {
          commute = arrow.biset.right[g][arrow.biset.left[hh][i]] == arrow.biset.left[hh][arrow.biset.right[g][i]];
        }
      }
    }
    if (!commute) {
      findings.push_back({"actions-do-not-commute", "arrow " + where + ": left and right actions do not commute"});
      continue;
    }
    for (std::uint32_t i = 0; i < h.size; ++i) arrow.orbit.push_back(i);
    q.arrows.push_back(std::move(arrow));
  }
  if (!findings.empty()) throw Error(ErrorKind::Validation, findings);
  return generate_free_category(q, opts.max_paths);
}

std::string vertex_label(const OrdinaryQuiver& q, std::size_t v) { return q.vertex_name(v); }

json morph_to_json(const MorphId& m, const std::vector<std::string>& ids) {
  return {{"source", ids[m.source]}, {"target", ids[m.target]}, {"index", m.index}};
}

}  // namespace

EICategory load_category(const json& doc, const LoadOptions& opts) {
  if (!doc.is_object()) schema("category document must be a JSON object");
  try {
    const std::string mode = doc.contains("mode") ? doc.at("mode").get<std::string>() : "explicit";
    if (mode == "explicit") return load_explicit(doc, opts);
    if (mode == "ei-quiver") return load_ei_quiver(doc, opts);
    schema("unknown mode \"" + mode + "\"");
  } catch (const json::exception& e) {
    schema(std::string("category document: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Schema, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write " + path);
  out << text;
}

json category_to_json(const EICategory& cat) {
  const CategoryData& d = cat.data();
  json doc;
  doc["mode"] = "explicit";
  doc["objects"] = json::array();
  for (const auto& o : d.objects) {
    json gens = json::array();
    for (const auto& g : o.group->generators()) gens.push_back(g.images());
    doc["objects"].push_back({{"id", o.id}, {"degree", o.group->degree()}, {"generators", gens}});
  }
  doc["homs"] = json::array();
  for (const auto& h : d.homs) {
    doc["homs"].push_back({{"from", d.objects[h.from].id},
                           {"to", d.objects[h.to].id},
                           {"size", h.size},
                           {"left_action", h.left_generators},
                           {"right_action", h.right_generators}});
  }
  doc["compositions"] = json::array();
  for (const auto& c : d.compositions) {
    doc["compositions"].push_back({{"outer", {d.objects[c.mid].id, d.objects[c.to].id}},
                                   {"inner", {d.objects[c.from].id, d.objects[c.mid].id}},
                                   {"table", c.table}});
  }
  return doc;
}

json quiver_to_json(const OrdinaryQuiver& q) {
  json doc;
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const auto& vx = q.vertices[v];
    doc["vertices"].push_back({{"object", q.object_ids[vx.object]},
                               {"irreducible", "X" + std::to_string(vx.irreducible)},
                               {"dim", vx.dim}});
  }
  doc["arrows"] = json::array();
  for (const auto& a : q.arrows) {
    json prov = json::array();
    for (const auto& p : a.provenance) {
      prov.push_back({{"alpha", morph_to_json(p.alpha, q.object_ids)},
                      {"V", "X" + std::to_string(p.v)},
                      {"W", "X" + std::to_string(p.w)},
                      {"U", "X" + std::to_string(p.u)},
                      {"e", p.e},
                      {"f", p.f}});
    }
    doc["arrows"].push_back({{"from", a.from},
                             {"to", a.to},
                             {"source", vertex_label(q, a.from)},
                             {"target", vertex_label(q, a.to)},
                             {"mult", a.mult},
                             {"provenance", prov}});
  }
  return doc;
}

std::string quiver_to_dot(const OrdinaryQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    out << "  \"" << vertex_label(q, v) << "\" [label=\"" << vertex_label(q, v) << " (dim " << q.vertices[v].dim
        << ")\"];\n";
  }
  for (const auto& a : q.arrows) {
    for (std::size_t k = 0; k < a.mult; ++k) {
      out << "  \"" << vertex_label(q, a.from) << "\" -> \"" << vertex_label(q, a.to) << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string quiver_to_text(const OrdinaryQuiver& q) {
  std::ostringstream out;
  out << q.vertices.size() << " vertices, " << q.arrows.size() << " arrows\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    out << "  " << vertex_label(q, v) << " dim " << q.vertices[v].dim << "\n";
  }
  for (const auto& a : q.arrows) {
    out << "  " << vertex_label(q, a.from) << " -> " << vertex_label(q, a.to) << " x" << a.mult << "\n";
  }
  return out.str();
}

json multiplicities_to_json(const MultiplicityMap& m, const OrdinaryQuiver& q) {
  json arr = json::array();
  for (const auto& [key, mult] : m) {
    arr.push_back({{"from", key.first},
                   {"to", key.second},
                   {"source", vertex_label(q, key.first)},
                   {"target", vertex_label(q, key.second)},
                   {"mult", mult}});
  }
  return arr;
}

json certificates_to_json(const std::vector<Certificate>& certs, const EICategory& cat) {
  json arr = json::array();
  for (const auto& c : certs) {
    json pair = nullptr;
    if (c.pair) pair = {cat.id(c.pair->first), cat.id(c.pair->second)};
    arr.push_back({{"rule", c.rule}, {"pair", pair}, {"witness", c.witness}});
  }
  return arr;
}

json verdict_to_json(const RepTypeVerdict& v, const EICategory& cat, const OrdinaryQuiver* q) {
  json doc;
  doc["verdict"] = to_string(v.verdict);
  doc["certificates"] = certificates_to_json(v.certificates, cat);
  json comps = json::array();
  for (const auto& c : v.components) {
    json verts = json::array();
    for (std::size_t x : c.vertices) {
      if (q) {
        verts.push_back(q->vertex_name(x));
      } else {
        verts.push_back(x);
      }
    }
    comps.push_back({{"kind", to_string(c.kind)}, {"type", c.type}, {"vertices", verts}});
  }
  doc["components"] = comps;
  return doc;
}

json cover_summary_to_json(const FreeCoverSummary& s, const EICategory& cat) {
  json pairs = json::array();
  for (std::size_t x = 0; x < s.objects; ++x) {
    for (std::size_t y = 0; y < s.objects; ++y) {
      if (x == y) continue;
      const std::size_t k = x * s.objects + y;
      if (s.cover_sizes[k] == 0 && s.original_sizes[k] == 0) continue;
      pairs.push_back({{"from", cat.id(x)}, {"to", cat.id(y)}, {"cover", s.cover_sizes[k]}, {"original", s.original_sizes[k]}});
    }
  }
  return {{"is_free", s.is_free}, {"pairs", pairs}};
}

json radical_to_json(const RadicalData& r) {
  return {{"rad_dim", r.rad_dim},
          {"rad2_dim", r.rad2_dim},
          {"quotient_dim", r.rad_dim - r.rad2_dim},
          {"nilpotency_index", r.nilpotency_index}};
}

json findings_to_json(const Error& e) {
  json arr = json::array();
  for (const auto& f : e.findings()) arr.push_back({{"code", f.code}, {"message", f.message}});
  if (arr.empty()) arr.push_back({{"code", "error"}, {"message", e.what()}});
  return {{"valid", false}, {"findings", arr}};
}

json matrix_to_json(const MatrixFp& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

MatrixFp matrix_from_json(const json& j, Index rows, Index cols, const PrimeField& f, const std::string& where) {
  if (!j.is_array()) schema(where + ": matrix must be an array of rows");
  MatrixFp m(rows, cols);
  if (rows == 0 || cols == 0) {
    if (!j.empty() && static_cast<Index>(j.size()) != rows) schema(where + ": matrix must be " + std::to_string(rows) + "x" + std::to_string(cols));
    return m;
  }
  if (static_cast<Index>(j.size()) != rows) schema(where + ": expected " + std::to_string(rows) + " rows");
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) schema(where + ": expected " + std::to_string(cols) + " columns");
    for (Index c = 0; c < cols; ++c) {
      if (!row[static_cast<std::size_t>(c)].is_number_integer()) schema(where + ": entries must be integers");
      m(i, c) = f.reduce(row[static_cast<std::size_t>(c)].get<Scalar>());
    }
  }
  return m;
}

CatRep load_cat_rep(const json& doc, const MoritaContext& ctx) {
  const EICategory& cat = ctx.category();
  const PrimeField& f = ctx.field();
  CatRep r;
  r.p = as_size(field(doc, "p", "representation"), "representation p");
  const std::size_t n = cat.object_count();
  r.dims.assign(n, 0);
  r.generators.assign(n, {});
  std::vector<bool> seen(n, false);
  const json& objs = field(doc, "objects", "representation");
  if (!objs.is_array()) schema("representation objects must be an array");
  for (const auto& o : objs) {
    const std::string id = field(o, "id", "representation object").get<std::string>();
    const std::size_t x = cat.object_index(id);
    seen[x] = true;
    r.dims[x] = as_size(field(o, "dim", "representation object " + id), id + " dim");
    const json& gens = field(o, "generator_matrices", "representation object " + id);
    if (!gens.is_array() || gens.size() != cat.group(x)->generator_positions().size()) {
      schema("representation object " + id + ": one matrix per group generator is required");
    }
    for (const auto& g : gens) {
      const auto d = static_cast<Index>(r.dims[x]);
      r.generators[x].push_back(matrix_from_json(g, d, d, f, "generator matrix of " + id));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) {
      // Missing objects carry the zero module.
      r.generators[x].assign(cat.group(x)->generator_positions().size(), MatrixFp(0, 0));
    }
  }
  const auto& reps = ctx.representatives();
  r.alpha.resize(reps.size());
  std::vector<bool> have(reps.size(), false);
  if (doc.contains("alpha_matrices")) {
    for (const auto& a : doc.at("alpha_matrices")) {
      const std::size_t k = as_size(field(a, "rep_index", "alpha matrix"), "rep_index");
      if (k >= reps.size()) schema("rep_index " + std::to_string(k) + " is out of range");
      const auto rows = static_cast<Index>(r.dims[reps[k].alpha.target]);
      const auto cols = static_cast<Index>(r.dims[reps[k].alpha.source]);
      r.alpha[k] = matrix_from_json(field(a, "matrix", "alpha matrix"), rows, cols, f, "alpha matrix " + std::to_string(k));
      have[k] = true;
    }
  }
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (!have[k]) {
      r.alpha[k] = MatrixFp::Zero(static_cast<Index>(r.dims[reps[k].alpha.target]), static_cast<Index>(r.dims[reps[k].alpha.source]));
    }
  }
  return r;
}

json cat_rep_to_json(const CatRep& r, const MoritaContext& ctx) {
  const EICategory& cat = ctx.category();
  json doc;
  doc["p"] = r.p;
  doc["objects"] = json::array();
  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    json gens = json::array();
    for (const auto& g : r.generators[x]) gens.push_back(matrix_to_json(g));
    doc["objects"].push_back({{"id", cat.id(x)}, {"dim", r.dims[x]}, {"generator_matrices", gens}});
  }
  doc["alpha_matrices"] = json::array();
  for (std::size_t k = 0; k < r.alpha.size(); ++k) {
    const MorphId& a = ctx.representatives()[k].alpha;
    doc["alpha_matrices"].push_back({{"rep_index", k},
                                     {"source", cat.id(a.source)},
                                     {"target", cat.id(a.target)},
                                     {"index", a.index},
                                     {"matrix", matrix_to_json(r.alpha[k])}});
  }
  return doc;
}

QuiverRep load_quiver_rep(const json& doc, const MoritaContext& ctx) {
  const OrdinaryQuiver& q = ctx.quiver();
  QuiverRep r;
  const json& verts = field(doc, "vertices", "quiver representation");
  if (!verts.is_array() || verts.size() != q.vertices.size()) {
    schema("quiver representation needs " + std::to_string(q.vertices.size()) + " vertices");
  }
  for (const auto& v : verts) r.dims.push_back(as_size(field(v, "dim", "vertex"), "vertex dim"));
  const json& arrows = field(doc, "arrows", "quiver representation");
  if (!arrows.is_array() || arrows.size() != ctx.units().size()) {
    schema("quiver representation needs " + std::to_string(ctx.units().size()) + " arrow matrices");
  }
  for (std::size_t u = 0; u < ctx.units().size(); ++u) {
    const auto& arrow = q.arrows[ctx.units()[u].arrow];
    r.maps.push_back(matrix_from_json(field(arrows[u], "matrix", "arrow"), static_cast<Index>(r.dims[arrow.to]),
                                      static_cast<Index>(r.dims[arrow.from]), ctx.field(), "arrow " + std::to_string(u)));
  }
  return r;
}

json quiver_rep_to_json(const QuiverRep& r, const MoritaContext& ctx) {
  const OrdinaryQuiver& q = ctx.quiver();
  json doc;
  doc["p"] = ctx.field().p();
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    doc["vertices"].push_back({{"object", q.object_ids[q.vertices[v].object]},
                               {"irreducible", "X" + std::to_string(q.vertices[v].irreducible)},
                               {"dim", r.dims[v]}});
  }
  doc["arrows"] = json::array();
  for (std::size_t u = 0; u < ctx.units().size(); ++u) {
    const auto& unit = ctx.units()[u];
    const auto& arrow = q.arrows[unit.arrow];
    const auto& pv = arrow.provenance[unit.provenance];
    doc["arrows"].push_back({{"from", arrow.from},
                             {"to", arrow.to},
                             {"source", q.vertex_name(arrow.from)},
                             {"target", q.vertex_name(arrow.to)},
                             {"rep_index", unit.rep},
                             {"U", "X" + std::to_string(pv.u)},
                             {"s", unit.s},
                             {"l", unit.l},
                             {"matrix", matrix_to_json(r.maps[u])}});
  }
  return doc;
}

}  // namespace eiq
