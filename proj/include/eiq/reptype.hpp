#pragma once

// Representation type: Dynkin / Euclidean recognition of quiver graphs, the
// hereditary test, and screens on two-object full subcategories.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eiq/chartab.hpp"
#include "eiq/eicat.hpp"
#include "eiq/quiveralg.hpp"

namespace eiq {

struct MultiEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t mult = 1;
};

struct Multigraph {
  std::size_t vertices = 0;
  std::vector<MultiEdge> edges;
};

Multigraph underlying_graph(const OrdinaryQuiver& q);

enum class GraphKind { Dynkin, Euclidean, Wild };

struct ComponentClass {
  GraphKind kind = GraphKind::Wild;
  std::string type;                   // "A5", "D4", "E6", "~A1", "~D5", "~E8", "wild"
  std::vector<std::size_t> vertices;  // ascending
};

/// Components ordered by least vertex.
std::vector<ComponentClass> classify_graph(const Multigraph& g);

enum class Verdict { Finite, Tame, Wild, InfiniteUncertified, Unknown };

std::string to_string(Verdict v);
std::string to_string(GraphKind k);

struct Certificate {
  std::string rule;
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // objects (source, target)
  std::string witness;
};

struct RepTypeVerdict {
  Verdict verdict = Verdict::Unknown;
  std::vector<Certificate> certificates;
  std::vector<ComponentClass> components;  // of the quiver that decided the verdict
};

/// Finite/Tame/Wild from the component kinds: any wild -> Wild, else any Euclidean -> Tame.
Verdict graph_verdict(const std::vector<ComponentClass>& components);
std::string describe(const std::vector<ComponentClass>& components);

bool is_hereditary(const EICategory& cat, Scalar p);

/// Screens every two-object full subcategory with a nonempty hom-set.
std::vector<Certificate> screen_two_object(const EICategory& cat, CharTableCache& tables);

RepTypeVerdict rep_type(const EICategory& cat, CharTableCache& tables);

}  // namespace eiq
