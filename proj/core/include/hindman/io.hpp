#pragma once

#include <string>
#include <string_view>

#include "hindman/axioms.hpp"
#include "hindman/coloring.hpp"
#include "hindman/divprop.hpp"
#include "hindman/family.hpp"
#include "hindman/intset.hpp"
#include "hindman/tree.hpp"

// JSON wire formats. Parsing failures throw Error(ErrorKind::Parse).
//
//   IntSet       {"n": N, "members": [ascending ints]}
//   DivProp      {"variant": "SYNDETIC", "g": 2, "w": 16, "margin": 16}
//                (INFINITE: k; BANACH: delta, w; RECIP: s; HITSET: n, W;
//                 rationals as "p/q" strings, integers, or [p, q])
//   SetFamily    {"n": N, "members": [[...], [...]]}
//   Coloring     {"n": N, "r": R, "colors": [color of 1, ..., color of N-1]}
//   Certificate  {"color": i, "depth": d, "prop": {...}, "nodes": [[], [1], ...],
//                 "coloring_digest": hex}
namespace hindman {

std::string to_json(const IntSet& s);
std::string to_json(const DivProp& p);
std::string to_json(const SetFamily& f);
std::string to_json(const Coloring& c);
std::string to_json(const Certificate& cert);
std::string to_json(const AxiomReport& report);

IntSet intset_from_json(std::string_view text);
DivProp prop_from_json(std::string_view text);
SetFamily family_from_json(std::string_view text);
Coloring coloring_from_json(std::string_view text);
Certificate certificate_from_json(std::string_view text);

/// Reads a whole file; throws Parse if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace hindman
