#pragma once

#include "crystald/kn.hpp"
#include "crystald/spinor.hpp"

namespace crystald {

Column phi(const Factor& f, int n);
// `h` is the column height; the kind is T(n-h), or Tbar(0) at h = n with
// an odd barred part.
Factor psi_a(const Column& c, int h, int n);
Factor psi_sp(const Column& c, int n);

SpinorTuple psi_lambda(const KNTableau& t);
KNTableau phi_lambda(const SpinorTuple& t);

}  // namespace crystald
