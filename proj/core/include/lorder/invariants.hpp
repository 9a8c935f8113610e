#pragma once

// Isomorphism invariants computed by structural recursion on terms.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lorder/tree.hpp"

namespace lorder {

struct Endpoints {
  bool has_min = false;
  bool has_max = false;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

std::size_t rank(const Tree3S& t);
Endpoints endpoints(const Tree3S& t);

// Discrete: every non-maximal point has an immediate successor and every
// non-minimal point an immediate predecessor.
bool is_discrete(const Tree3S& t);

// Number of points when the order is finite.
std::optional<std::size_t> finite_size(const Tree3S& t);

// Finite condensation L^(1).
Tree3S derivative(const Tree3S& t);
Tree3S derivative(const Tree3S& t, std::size_t times);

// Drop the least / greatest point.  Preconditions: it exists.
Tree3S remove_min(const Tree3S& t);
Tree3S remove_max(const Tree3S& t);

// Sequence-level versions used by the other modules.
std::size_t rank(const std::vector<Node>& items);
Endpoints endpoints(const std::vector<Node>& items);

struct Fingerprint {
  std::size_t rank = 0;
  bool has_min = false;
  bool has_max = false;
  bool discrete = true;
  std::optional<std::size_t> size;
  std::shared_ptr<const Fingerprint> derivative;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b);
};

Fingerprint fingerprint(const Tree3S& t);

nlohmann::json to_json(const Fingerprint& f);
std::string to_string(const Fingerprint& f);

}  // namespace lorder
