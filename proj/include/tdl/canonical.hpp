#pragma once

#include <string>
#include <vector>

#include "tdl/digraph.hpp"

namespace tdl {

struct CanonicalForm {
    Digraph graph;               // g relabelled by `labelling`
    std::vector<int> labelling;  // vertex v of the input becomes labelling[v]
};

// Deterministic canonical labelling: colour refinement on (out, in)
// neighbour colour multisets, then individualisation over the first
// non-singleton cell. Interchangeable twins are tried once. The leaf with
// the lexicographically largest adjacency matrix wins.
CanonicalForm canonical_form(const Digraph& g);

// Hex line of the canonical graph; equal iff the inputs are isomorphic.
std::string canonical_key(const Digraph& g);

bool are_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace tdl
