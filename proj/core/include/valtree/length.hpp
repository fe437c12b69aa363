#pragma once

#include "valtree/ext_int.hpp"
#include "valtree/mat.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

/// l(g) = -min over all entries of g and g^-1 of their valuations.
/// Throws Errc::not_special_linear unless det(g) = 1.
ExtInt length(const Valuation& v, const Mat& g);

/// Modified length on uni-upper-triangular matrices: entries above the
/// diagonal are weighted by 1/2^(j-i-1) before taking the minimum with 0.
/// Throws Errc::not_unipotent_form.
Rational tilde_length(const Valuation& v, const Mat& g);

/// dist(g, h) = l(g^-1 h). A pseudometric: zero distance does not force g = h.
ExtInt pseudometric(const Valuation& v, const Mat& g, const Mat& h);

/// Replaces each diagonal entry by pi^nu(entry) for the uniformizer pi.
/// Throws Errc::not_diagonal, Errc::not_special_linear.
Mat diagonal_coarse(const Valuation& v, const Mat& g);

/// -min{0,a,b/2} <= -min{0,a,b} <= -2 min{0,a,b/2}.
bool check_inequality_lemma(const Rational& a, const Rational& b);

}  // namespace valtree
