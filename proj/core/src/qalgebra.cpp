#include "rsf/qalgebra.hpp"

#include "rsf/fraction.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace rsf {

const LinOp& DefiningRep::gen(Gen g, int j) const {
  const std::vector<LinOp>* family = nullptr;
  switch (g) {
    case Gen::E: family = &e; break;
    case Gen::F: family = &f; break;
    case Gen::Omega: family = &omega; break;
    case Gen::OmegaInv: family = &omega_inv; break;
    case Gen::OmegaPrime: family = &omega_prime; break;
    case Gen::OmegaPrimeInv: family = &omega_prime_inv; break;
  }
  return family->at(static_cast<std::size_t>(j) - 1);
}

DefiningRep defining_rep(int n, const Params& params) {
  if (n < 2) throw std::invalid_argument("defining_rep needs n >= 2");
  DefiningRep rep{n, params, {}, {}, {}, {}, {}, {}};
  const Rational& r = params.r;
  const Rational& s = params.s;
  for (int j = 1; j < n; ++j) {
    rep.e.push_back(LinOp::unit(n, j - 1, j));
    rep.f.push_back(LinOp::unit(n, j, j - 1));
    LinOp om(n, n), omp(n, n), omi(n, n), ompi(n, n);
    for (int k = 0; k < n; ++k) {
      Rational w(1), wp(1);
      if (k == j - 1) {
        w = r;
        wp = s;
      } else if (k == j) {
        w = s;
        wp = r;
      }
      om.set(k, k, w);
      omi.set(k, k, Rational(1) / w);
      omp.set(k, k, wp);
      ompi.set(k, k, Rational(1) / wp);
    }
    rep.omega.push_back(std::move(om));
    rep.omega_inv.push_back(std::move(omi));
    rep.omega_prime.push_back(std::move(omp));
    rep.omega_prime_inv.push_back(std::move(ompi));
  }
  return rep;
}

namespace {

LinOp kron_chain(const std::vector<const LinOp*>& factors) {
  LinOp acc = LinOp::identity(1);
  for (const LinOp* f : factors) acc = acc.kron(*f);
  return acc;
}

}  // namespace

LinOp coproduct_action(Gen g, int i, int n, int m, const Params& params) {
  if (m < 1) throw std::invalid_argument("coproduct_action needs m >= 1");
  DefiningRep rep = defining_rep(n, params);
  LinOp id = LinOp::identity(n);

  if (g == Gen::Omega || g == Gen::OmegaInv || g == Gen::OmegaPrime || g == Gen::OmegaPrimeInv) {
    std::vector<const LinOp*> factors(static_cast<std::size_t>(m), &rep.gen(g, i));
    return kron_chain(factors);
  }

  long dim = TensorSpace(n, m).dimension();
  LinOp out(dim, dim);
  for (int k = 1; k <= m; ++k) {
    std::vector<const LinOp*> factors;
    for (int pos = 1; pos <= m; ++pos) {
      if (pos < k) {
        factors.push_back(g == Gen::E ? &rep.gen(Gen::Omega, i) : &id);
      } else if (pos == k) {
        factors.push_back(&rep.gen(g, i));
      } else {
        factors.push_back(g == Gen::E ? &id : &rep.gen(Gen::OmegaPrime, i));
      }
    }
    out = out + kron_chain(factors);
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> weight_eigenvalues(const GlWeight& mu,
                                                              const Params& params) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    long a = mu[i];
    long b = mu[i + 1];
    out.emplace_back(rational_pow(params.r, a) * rational_pow(params.s, b),
                     rational_pow(params.s, a) * rational_pow(params.r, b));
  }
  return out;
}

LinOp rcheck(int n, const Params& params) {
  if (n < 2) throw std::invalid_argument("rcheck needs n >= 2");
  const Rational& r = params.r;
  const Rational& s = params.s;
  long d = static_cast<long>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<long>(i - 1) * n + (j - 1); };
  LinOp out(d, d);
  for (int i = 1; i <= n; ++i) out.set(idx(i, i), idx(i, i), Rational(1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.set(idx(j, i), idx(i, j), r);                       // v_i v_j -> r v_j v_i
      out.set(idx(i, j), idx(j, i), Rational(1) / s);         // v_j v_i -> s^{-1} v_i v_j
      out.add_to(idx(j, i), idx(j, i), Rational(1) - r / s);  // + (1 - r/s) v_j v_i
    }
  }
  return out;
}

LinOp rcheck_z(int n, const Rational& z, const Params& params) {
  if (n < 2) throw std::invalid_argument("rcheck_z needs n >= 2");
  const Rational& r = params.r;
  const Rational& s = params.s;
  long d = static_cast<long>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<long>(i - 1) * n + (j - 1); };
  LinOp out(d, d);
  Rational one(1);
  for (int i = 1; i <= n; ++i) out.set(idx(i, i), idx(i, i), one - z * r / s);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Rational coef = i > j ? r : Rational(1) / s;
      // kron(E_ij, E_ji): sends v_j (x) v_i to v_i (x) v_j.
      out.add_to(idx(i, j), idx(j, i), (one - z) * coef);
      if (i < j) {
        out.add_to(idx(i, j), idx(i, j), z * (one - r / s));
      } else {
        out.add_to(idx(i, j), idx(i, j), one - r / s);
      }
    }
  }
  return out;
}

LinOp rcheck_xy(int n, const Rational& x, const Rational& y, const Params& params) {
  if (x == y) throw SingularPoint("rcheck_xy requires x != y");
  if (y == 0) throw std::invalid_argument("rcheck_xy requires y != 0");
  return rcheck_z(n, x / y, params).scaled(params.s * y / (y - x));
}

std::vector<Vec> sym2_basis(int n, const Params& params) {
  long d = static_cast<long>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1)); };
  std::vector<Vec> out;
  for (int i = 1; i <= n; ++i) {
    Vec v(static_cast<std::size_t>(d), Rational(0));
    v[idx(i, i)] = Rational(1);
    out.push_back(std::move(v));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Vec v(static_cast<std::size_t>(d), Rational(0));
      v[idx(i, j)] = Rational(1);
      v[idx(j, i)] = params.s;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Vec> wedge2_basis(int n, const Params& params) {
  long d = static_cast<long>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1)); };
  std::vector<Vec> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Vec v(static_cast<std::size_t>(d), Rational(0));
      v[idx(i, j)] = Rational(1);
      v[idx(j, i)] = -params.r;
      out.push_back(std::move(v));
    }
  }
  return out;
}

long long fundamental_module_dim(int n, int k, const Params& params) {
  if (k < 1 || k > n) throw std::invalid_argument("fundamental_module_dim needs 1 <= k <= n");
  TensorSpace space(n, k);
  long dim = space.dimension();
  EchelonBasis relations(dim);
  std::vector<Vec> s2 = sym2_basis(n, params);
  long left = 1;
  for (int pos = 1; pos <= k - 1; ++pos) {
    long right = 1;
    for (int t = 0; t < k - pos - 1; ++t) right *= n;
    for (long a = 0; a < left; ++a) {
      for (const Vec& w : s2) {
        for (long b = 0; b < right; ++b) {
          Vec v(static_cast<std::size_t>(dim), Rational(0));
          for (std::size_t ww = 0; ww < w.size(); ++ww) {
            if (w[ww] == 0) continue;
            long full = (a * static_cast<long>(w.size()) + static_cast<long>(ww)) * right + b;
            v[static_cast<std::size_t>(full)] = w[ww];
          }
          relations.insert(std::move(v));
        }
      }
    }
    left *= n;
  }
  return dim - relations.rank();
}

namespace {

std::vector<std::pair<Gen, int>> all_generators(int n) {
  std::vector<std::pair<Gen, int>> out;
  for (int i = 1; i < n; ++i) {
    for (Gen g : {Gen::E, Gen::F, Gen::Omega, Gen::OmegaInv, Gen::OmegaPrime, Gen::OmegaPrimeInv})
      out.emplace_back(g, i);
  }
  return out;
}

// <eps_i, alpha_j> with alpha_j = eps_j - eps_{j+1}.
int bracket(int i, int j) { return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0); }

Rational power_pair(const Params& p, int a, int b) {
  return rational_pow(p.r, a) * rational_pow(p.s, b);
}

}  // namespace

CheckReport relations_report(int n, const Params& params) {
  CheckReport report;
  DefiningRep rep = defining_rep(n, params);
  LinOp id = LinOp::identity(n);
  const Rational& r = params.r;
  const Rational& s = params.s;

  {
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      if (!(rep.omega[i - 1] * rep.omega_inv[i - 1] == id)) ok = false;
      if (!(rep.omega_prime[i - 1] * rep.omega_prime_inv[i - 1] == id)) ok = false;
      for (int j = 1; j < n; ++j) {
        if (!commutator(rep.omega[i - 1], rep.omega[j - 1]).is_zero()) ok = false;
        if (!commutator(rep.omega[i - 1], rep.omega_prime[j - 1]).is_zero()) ok = false;
        if (!commutator(rep.omega_prime[i - 1], rep.omega_prime[j - 1]).is_zero()) ok = false;
      }
    }
    report.add("(R1) omega family invertible and commutative", ok);
  }

  {
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        Rational ce = power_pair(params, bracket(i, j), bracket(i + 1, j));
        Rational cf = Rational(1) / ce;
        if (!(rep.omega[i - 1] * rep.e[j - 1] == rep.e[j - 1].scaled(ce) * rep.omega[i - 1]))
          ok = false;
        if (!(rep.omega[i - 1] * rep.f[j - 1] == rep.f[j - 1].scaled(cf) * rep.omega[i - 1]))
          ok = false;
      }
    }
    report.add("(R2) omega_i e_j / f_j commutation scalars", ok);
  }

  {
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        // omega' swaps the roles of r and s.
        Rational ce = rational_pow(params.s, bracket(i, j)) * rational_pow(params.r, bracket(i + 1, j));
        Rational cf = Rational(1) / ce;
        if (!(rep.omega_prime[i - 1] * rep.e[j - 1] ==
              rep.e[j - 1].scaled(ce) * rep.omega_prime[i - 1]))
          ok = false;
        if (!(rep.omega_prime[i - 1] * rep.f[j - 1] ==
              rep.f[j - 1].scaled(cf) * rep.omega_prime[i - 1]))
          ok = false;
      }
    }
    report.add("(R3) omega'_i e_j / f_j commutation scalars", ok);
  }

  {
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        LinOp lhs = commutator(rep.e[i - 1], rep.f[j - 1]);
        if (i == j) {
          LinOp rhs = (rep.omega[i - 1] - rep.omega_prime[i - 1]).scaled(Rational(1) / (r - s));
          if (!(lhs == rhs)) ok = false;
        } else if (!lhs.is_zero()) {
          ok = false;
        }
      }
    }
    report.add("(R4) [e_i, f_j] = delta_ij (omega_i - omega'_i)/(r - s)", ok);
  }

  {
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (!commutator(rep.e[i - 1], rep.e[j - 1]).is_zero()) ok = false;
        if (!commutator(rep.f[i - 1], rep.f[j - 1]).is_zero()) ok = false;
      }
    }
    report.add("(R5) distant e's and f's commute", ok);
  }

  // Adjacent Serre identities, checked on V and on V (x) V (the coproduct
  // action is where the coefficients actually bite).
  auto serre_e = [&](const LinOp& a, const LinOp& b) {
    // a = e_i, b = e_{i+1}:  a a b - (r+s) a b a + rs b a a = 0
    return a * a * b - (a * b * a).scaled(r + s) + (b * a * a).scaled(r * s);
  };
  auto serre_e2 = [&](const LinOp& a, const LinOp& b) {
    // a b b - (r+s) b a b + rs b b a = 0
    return a * b * b - (b * a * b).scaled(r + s) + (b * b * a).scaled(r * s);
  };
  auto serre_f = [&](const LinOp& a, const LinOp& b) {
    Rational ri = Rational(1) / r, si = Rational(1) / s;
    return a * a * b - (a * b * a).scaled(ri + si) + (b * a * a).scaled(ri * si);
  };
  auto serre_f2 = [&](const LinOp& a, const LinOp& b) {
    Rational ri = Rational(1) / r, si = Rational(1) / s;
    return a * b * b - (b * a * b).scaled(ri + si) + (b * b * a).scaled(ri * si);
  };

  {
    bool ok = true;
    for (int i = 1; i + 1 < n; ++i) {
      if (!serre_e(rep.e[i - 1], rep.e[i]).is_zero()) ok = false;
      if (!serre_e2(rep.e[i - 1], rep.e[i]).is_zero()) ok = false;
    }
    report.add("(R6) e-Serre identities on V", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i + 1 < n; ++i) {
      if (!serre_f(rep.f[i - 1], rep.f[i]).is_zero()) ok = false;
      if (!serre_f2(rep.f[i - 1], rep.f[i]).is_zero()) ok = false;
    }
    report.add("(R7) f-Serre identities on V", ok);
  }

  {
    bool ok = true;
    int m = 2;
    for (int i = 1; i < n; ++i) {
      LinOp ei = coproduct_action(Gen::E, i, n, m, params);
      LinOp fi = coproduct_action(Gen::F, i, n, m, params);
      LinOp om = coproduct_action(Gen::Omega, i, n, m, params);
      LinOp omp = coproduct_action(Gen::OmegaPrime, i, n, m, params);
      LinOp rhs = (om - omp).scaled(Rational(1) / (r - s));
      if (!(commutator(ei, fi) == rhs)) ok = false;
      for (int j = 1; j < n; ++j) {
        if (j == i) continue;
        LinOp fj = coproduct_action(Gen::F, j, n, m, params);
        if (!commutator(ei, fj).is_zero()) ok = false;
      }
    }
    report.add("(R4) on V (x) V through the comultiplication", ok);
  }

  if (n >= 3) {
    bool ok = true;
    int m = 2;
    for (int i = 1; i + 1 < n; ++i) {
      LinOp a = coproduct_action(Gen::E, i, n, m, params);
      LinOp b = coproduct_action(Gen::E, i + 1, n, m, params);
      if (!serre_e(a, b).is_zero()) ok = false;
      if (!serre_e2(a, b).is_zero()) ok = false;
      LinOp af = coproduct_action(Gen::F, i, n, m, params);
      LinOp bf = coproduct_action(Gen::F, i + 1, n, m, params);
      if (!serre_f(af, bf).is_zero()) ok = false;
      if (!serre_f2(af, bf).is_zero()) ok = false;
    }
    report.add("(R6)/(R7) Serre identities on V (x) V", ok);
  }

  return report;
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;  // -9..9
  long den = static_cast<long>(rng() % 9) + 1;   // 1..9
  return Rational(num) / Rational(den);
}

Rational small_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rational x = small_rational(rng);
    if (x != 0) return x;
  }
}

}  // namespace

CheckReport rmatrix_report(int n, const Params& params, std::uint64_t seed, int trials) {
  CheckReport report;
  const Rational& r = params.r;
  const Rational& s = params.s;
  LinOp R = rcheck(n, params);
  long d = static_cast<long>(n) * n;

  {
    LinOp lhs = R * R;
    LinOp rhs = R.scaled(Rational(1) - r / s) + LinOp::identity(d).scaled(r / s);
    report.add("quadratic relation R^2 = (1 - r/s) R + (r/s) Id", lhs == rhs);
  }

  {
    LinOp r1 = embed_pair_at(R, 1, 3, n);
    LinOp r2 = embed_pair_at(R, 2, 3, n);
    report.add("braid relation R_1 R_2 R_1 = R_2 R_1 R_2", r1 * r2 * r1 == r2 * r1 * r2);
  }

  {
    LinOp r1 = embed_pair_at(R, 1, 4, n);
    LinOp r3 = embed_pair_at(R, 3, 4, n);
    report.add("distant braids commute R_1 R_3 = R_3 R_1", commutator(r1, r3).is_zero());
  }

  report.add("degeneration R(0) = R", rcheck_z(n, Rational(0), params) == R);

  {
    // One-parameter specialization r = q, s = 1/q: compare against the
    // standard one-parameter matrix
    //   (1 - z q^2) sum E_ii(x)E_ii + q(1 - z) sum_{i != j} E_ij(x)E_ji
    //   + (1 - q^2)[ sum_{i>j} + z sum_{i<j} ] E_ii(x)E_jj
    // entrywise at several z (both sides are linear in z).
    bool ok = true;
    for (Rational q : {Rational(2), Rational(3) / 2}) {
      Params pq(q, Rational(1) / q);
      for (Rational z : {Rational(0), Rational(1) / 2, Rational(3)}) {
        LinOp lhs = rcheck_z(n, z, pq);
        LinOp rhs(d, d);
        auto idx = [n](int i, int j) { return static_cast<long>(i - 1) * n + (j - 1); };
        for (int i = 1; i <= n; ++i) rhs.set(idx(i, i), idx(i, i), Rational(1) - z * q * q);
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            rhs.add_to(idx(i, j), idx(j, i), q * (Rational(1) - z));
            if (i > j) {
              rhs.add_to(idx(i, j), idx(i, j), Rational(1) - q * q);
            } else {
              rhs.add_to(idx(i, j), idx(i, j), z * (Rational(1) - q * q));
            }
          }
        }
        if (!(lhs == rhs)) ok = false;
      }
    }
    report.add("specialization r = q, s = 1/q reproduces the one-parameter matrix", ok);
  }

  std::mt19937_64 rng(seed);
  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      Rational z = small_rational(rng);
      Rational w = small_rational(rng);
      LinOp a = embed_pair_at(rcheck_z(n, z, params), 1, 3, n) *
                embed_pair_at(rcheck_z(n, z * w, params), 2, 3, n) *
                embed_pair_at(rcheck_z(n, w, params), 1, 3, n);
      LinOp b = embed_pair_at(rcheck_z(n, w, params), 2, 3, n) *
                embed_pair_at(rcheck_z(n, z * w, params), 1, 3, n) *
                embed_pair_at(rcheck_z(n, z, params), 2, 3, n);
      if (!(a == b)) ok = false;
    }
    report.add("spectral Yang-Baxter identity for R(z)", ok);
  }

  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      Rational x, y, z;
      do {
        x = small_rational(rng);
        y = small_nonzero(rng);
        z = small_nonzero(rng);
      } while (x == y || x == z || y == z);
      LinOp a = embed_pair_at(rcheck_xy(n, x, y, params), 1, 3, n) *
                embed_pair_at(rcheck_xy(n, x, z, params), 2, 3, n) *
                embed_pair_at(rcheck_xy(n, y, z, params), 1, 3, n);
      LinOp b = embed_pair_at(rcheck_xy(n, y, z, params), 2, 3, n) *
                embed_pair_at(rcheck_xy(n, x, z, params), 1, 3, n) *
                embed_pair_at(rcheck_xy(n, x, y, params), 2, 3, n);
      if (!(a == b)) ok = false;
    }
    report.add("two-parameter Yang-Baxter identity for R(x,y)", ok);
  }

  {
    bool ok = true;
    for (int m = 2; m <= 3; ++m) {
      for (int i = 1; i < m; ++i) {
        LinOp ri = embed_pair_at(R, i, m, n);
        for (const auto& [g, j] : all_generators(n)) {
          if (!commutator(ri, coproduct_action(g, j, n, m, params)).is_zero()) ok = false;
        }
      }
    }
    report.add("R_i commutes with the full generator action (m = 2, 3)", ok);
  }

  return report;
}

CheckReport submodule_report(int n, const Params& params) {
  CheckReport report;
  long d = static_cast<long>(n) * n;
  LinOp at_sr = rcheck_xy(n, Rational(1), params.s_over_r(), params);
  LinOp at_rs = rcheck_xy(n, Rational(1), params.r_over_s(), params);

  EchelonBasis s2 = span_of(sym2_basis(n, params), d);
  EchelonBasis w2 = span_of(wedge2_basis(n, params), d);
  EchelonBasis im_sr = span_of(image_basis(at_sr), d);
  EchelonBasis im_rs = span_of(image_basis(at_rs), d);
  EchelonBasis ker_sr = span_of(kernel_basis(at_sr), d);
  EchelonBasis ker_rs = span_of(kernel_basis(at_rs), d);

  bool sr_is_s2 = im_sr == s2;
  bool rs_is_w2 = im_rs == w2;
  bool sr_is_w2 = im_sr == w2;
  bool rs_is_s2 = im_rs == s2;
  report.add("images at the two special points give {S2, Lambda2} as a set",
             (sr_is_s2 && rs_is_w2) || (sr_is_w2 && rs_is_s2));
  report.add("computed labeling: image R(1, s/r) = S2 and image R(1, r/s) = Lambda2",
             sr_is_s2 && rs_is_w2);
  report.add("image at one special point = kernel at the other",
             im_sr == ker_rs && im_rs == ker_sr);

  {
    bool ok = true;
    for (const auto& [g, j] : all_generators(n)) {
      LinOp act = coproduct_action(g, j, n, 2, params);
      for (const Vec& v : sym2_basis(n, params))
        if (!s2.contains(act.apply(v))) ok = false;
      for (const Vec& v : wedge2_basis(n, params))
        if (!w2.contains(act.apply(v))) ok = false;
    }
    report.add("S2 and Lambda2 are invariant under the full generator action", ok);
  }

  return report;
}

}  // namespace rsf
