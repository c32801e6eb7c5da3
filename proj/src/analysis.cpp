#include "subdiv/analysis.hpp"

#include <algorithm>
#include <vector>

#include "subdiv/error.hpp"

namespace subdiv {

std::string to_string(Orientation orientation) {
  switch (orientation) {
    case Orientation::primal: return "primal";
    case Orientation::dual: return "dual";
    case Orientation::neither: return "neither";
  }
  return "neither";
}

Orientation classify_primal_dual(const LaurentSymbol& a) {
  const LaurentSymbol reflected = a.reflected();
  if (a == reflected) return Orientation::primal;
  if (a.shifted(1) == reflected) return Orientation::dual;
  return Orientation::neither;
}

namespace {

void require_normalized(const LaurentSymbol& a) {
  if (a.evaluate(Rational(1)) != 2) {
    throw Error(ErrorKind::normalization, "symbol must satisfy a(1) = 2, got a(1) = " + to_string(a.evaluate(Rational(1))));
  }
}

}  // namespace

int generation_degree(const LaurentSymbol& a, int max_d) {
  require_normalized(a);
  const Rational minus_one(-1);
  if (a.evaluate(minus_one) != 0) return -1;
  const int cap = std::min(max_d, a.span());
  int d = 0;
  while (d < cap && a.derivative_at(d + 1, minus_one) == 0) ++d;
  return d;
}

DegreeReport reproduction_degree(const LaurentSymbol& a, int max_d) {
  DegreeReport report;
  report.generation_degree = generation_degree(a, max_d);
  const Rational one(1);
  report.tau = a.derivative_at(1, one) / 2;
  if (report.generation_degree < 0) return report;

  int d = 0;
  Rational expected(2);
  while (d < report.generation_degree) {
    const int m = d + 1;
    expected *= (report.tau - (m - 1));
    if (a.derivative_at(m, one) != expected) break;
    d = m;
  }
  report.reproduction_degree = d;
  return report;
}

int support_width(Family family, int n) {
  switch (family) {
    case Family::relaxed_2N2: return 2 * (2 * n + 2);
    case Family::relaxed_2N3: return 2 * (2 * n + 3);
    case Family::interpolatory_2N4: return 2 * (2 * n + 4) - 2;
  }
  throw Error(ErrorKind::classification, "unknown family tag");
}

int support_width(const ParametricMask& mask) {
  return support_width(mask.family(), mask.n());
}

namespace {

Rational residue_norm(const LaurentSymbol& cl, int l) {
  const long modulus = 1L << l;
  std::vector<Rational> sums(static_cast<std::size_t>(modulus));
  for (int e = cl.lowest(); e <= cl.highest(); ++e) {
    long r = e % modulus;
    if (r < 0) r += modulus;
    sums[static_cast<std::size_t>(r)] += abs(cl.coefficient(e));
  }
  return *std::max_element(sums.begin(), sums.end());
}

}  // namespace

Rational contractivity_norm(const LaurentSymbol& c, int l) {
  if (l < 1) throw Error(ErrorKind::domain, "contractivity level l must be >= 1");
  LaurentSymbol cl = c;
  for (int k = 1; k < l; ++k) cl = cl * c.upsampled(1 << k);
  return residue_norm(cl, l);
}

ContinuityCertificate continuity_lower_bound(const LaurentSymbol& a, int max_n, int max_l, Deadline deadline) {
  require_normalized(a);
  ContinuityCertificate cert;
  const int factors = a.one_plus_z_multiplicity();
  if (factors == 0) return cert;

  auto expired = [&] { return deadline && std::chrono::steady_clock::now() > *deadline; };

  for (int n = std::min(factors - 1, max_n); n >= 0; --n) {
    // b(z) = a(z) (2z)^n / (1+z)^n
    LaurentSymbol b = a;
    for (int t = 0; t < n; ++t) b = *b.divide_by_one_plus_z();
    b = b.shifted(n) * Rational(mpz_class(1) << n);
    const LaurentSymbol c = *b.divide_by_one_plus_z();

    LaurentSymbol cl = c;
    for (int l = 1; l <= max_l; ++l) {
      if (expired()) {
        cert.timed_out = true;
        return cert;
      }
      if (l > 1) cl = cl * c.upsampled(1 << (l - 1));
      Rational norm = residue_norm(cl, l);
      if (norm < 1) {
        cert.certified_order = n;
        cert.smoothing_factors_extracted = n;
        cert.contraction_level = l;
        cert.norm_value = norm;
        return cert;
      }
    }
  }
  return cert;
}

std::string to_string(SpecialScheme scheme) {
  switch (scheme) {
    case SpecialScheme::S_a3: return "S_a3";
    case SpecialScheme::S_a5: return "S_a5";
    case SpecialScheme::S_a7: return "S_a7";
  }
  return "?";
}

std::optional<SpecialScheme> special_scheme_for(Family family, int n) {
  if (family == Family::relaxed_2N2) return std::nullopt;
  switch (n) {
    case 0: return SpecialScheme::S_a3;
    case 1: return SpecialScheme::S_a5;
    case 2: return SpecialScheme::S_a7;
    default: return std::nullopt;
  }
}

SpecialCheck special_continuity_check(SpecialScheme scheme, const Rational& alpha, const Rational& beta) {
  const Rational w = beta * (1 - alpha);
  SpecialCheck out;
  switch (scheme) {
    case SpecialScheme::S_a3: {
      const Rational g1 = 2 * abs(2 * alpha - 4 * w);
      const Rational g2 = 2 * abs(2 * w);
      const Rational g3 = abs(1 + 4 * w - 4 * alpha);
      out.max_value = std::max(g1, Rational(g2 + g3));
      out.claimed_order = 1;
      break;
    }
    case SpecialScheme::S_a5: {
      const Rational e1 = 16 * abs(w);
      const Rational e2 = 2 * abs(-56 * w - 32 * alpha + ratio(1, 2));
      const Rational e3 = 2 * abs(-32 * w - 8 * alpha);
      const Rational e4 = abs(-48 * alpha - 64 * w + 2);
      out.max_value = std::max(Rational(e1 + e2), Rational(e3 + e4));
      out.claimed_order = 3;
      break;
    }
    case SpecialScheme::S_a7: {
      const Rational x1 = 64 * abs(w);
      const Rational x2 = 2 * abs(-512 * w + 192 * alpha - ratio(3, 8));
      const Rational x3 = abs(-ratio(19, 4) - 960 * w + 640 * alpha);
      const Rational x4 = 2 * abs(-192 * w + 32 * alpha);
      const Rational x5 = 2 * abs(480 * alpha - ratio(9, 4) - 832 * w);
      out.max_value = std::max(Rational(x1 + x2 + x3), Rational(x4 + x5));
      out.claimed_order = 5;
      break;
    }
  }
  out.holds = out.max_value < 1;
  return out;
}

}  // namespace subdiv
