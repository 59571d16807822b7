#pragma once

#include <string>

#include "banachlab/algebra.hpp"
#include "banachlab/numrange.hpp"

namespace banachlab {

// JSON on-disk algebra description:
//   {
//     "dim": n,
//     "label": "...",
//     "mult": [[i, j, k, re, im], ...],   // e_i * e_j has coefficient
//                                         // (re, im) on e_k
//     "norm": {"type": "l1"}
//           | {"type": "l1", "weights": [w0, ...]}
//           | {"type": "opnorm", "domain": "l1"|"linf"|"l2",
//              "rep": [[[re, im], ...], ...]  // one row-major matrix
//                                             // per basis vector
//              , "weights": [...]}            // optional, l1 domain
//     "identity": [[re, im], ...]             // optional hint
//   }
AlgebraPtr load_algebra(const std::string& path);
void save_algebra(const AlgebraPtr& alg, const std::string& path);

// Coefficient vectors: either "[re, re, ...]" or "[[re, im], ...]".
cvec parse_coeffs(const std::string& text, int dim);

// Stable formatting used by every machine-readable artifact.
std::string format_double(double v);

// CSV with one line per direction: theta, support value.
void write_outer_csv(const OuterBody& body, const std::string& path);
void write_inner_csv(const std::vector<cplx>& pts, const std::string& path);

}  // namespace banachlab
