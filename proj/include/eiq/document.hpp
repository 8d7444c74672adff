#pragma once

// JSON and DOT documents: category input (explicit or ei-quiver mode),
// quiver / verdict / oracle reports, and representation files.

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "eiq/eicat.hpp"
#include "eiq/freecover.hpp"
#include "eiq/morita.hpp"
#include "eiq/oracle.hpp"
#include "eiq/permgrp.hpp"
#include "eiq/quiveralg.hpp"
#include "eiq/reptype.hpp"

namespace eiq {

using nlohmann::json;

struct LoadOptions {
  std::size_t max_group = kDefaultGroupBound;
  std::size_t max_paths = kDefaultMaxPaths;
};

/// Throws Schema on shape problems and Validation on axiom violations.
EICategory load_category(const json& doc, const LoadOptions& opts = {});
/// Throws Io when the file cannot be read and Schema when it is not JSON.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Explicit-mode document of any category (round-trips through load_category).
json category_to_json(const EICategory& cat);

json quiver_to_json(const OrdinaryQuiver& q);
std::string quiver_to_dot(const OrdinaryQuiver& q);
std::string quiver_to_text(const OrdinaryQuiver& q);

json multiplicities_to_json(const MultiplicityMap& m, const OrdinaryQuiver& q);
json verdict_to_json(const RepTypeVerdict& v, const EICategory& cat, const OrdinaryQuiver* q = nullptr);
json certificates_to_json(const std::vector<Certificate>& certs, const EICategory& cat);
json cover_summary_to_json(const FreeCoverSummary& s, const EICategory& cat);
json radical_to_json(const RadicalData& r);
json findings_to_json(const Error& e);

json matrix_to_json(const MatrixFp& m);
/// Reads a rows x cols matrix; [] is accepted for empty shapes.
MatrixFp matrix_from_json(const json& j, Index rows, Index cols, const PrimeField& f, const std::string& where);

CatRep load_cat_rep(const json& doc, const MoritaContext& ctx);
json cat_rep_to_json(const CatRep& r, const MoritaContext& ctx);
QuiverRep load_quiver_rep(const json& doc, const MoritaContext& ctx);
json quiver_rep_to_json(const QuiverRep& r, const MoritaContext& ctx);

}  // namespace eiq
