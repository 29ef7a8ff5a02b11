#pragma once

namespace steklov {

struct Tolerances {
  double poly = 1e-12;        // polynomial comparison
  double congruence = 1e-9;
  double closure = 1e-10;
  double merge = 1e-12;       // relative, for equal frequencies
  double drop = 1e-12;        // coefficients below this vanish
  double self_check = 1e-9;   // reconstructed candidate vs input polynomial
  double snap = 1e-10;        // snapping derived angles onto pi/k
  double odd_snap = 1e-6;     // intermediate odd-angle detection in reconstruction
  int m_cap = 50;             // |c| inverse intervals tried below pi/3
  long odd_denominator_bound = 1000;
};

}  // namespace steklov
