#include "evtp/signs/sign_pattern.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "evtp/core/error.hpp"

namespace evtp {

bool SignPattern::all_positive() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

template <Scalar T>
SignPattern sign_pattern(const Matrix<T>& a, double zero_tolerance) {
  if (zero_tolerance < 0.0) throw std::invalid_argument("zero tolerance must be non-negative");
  SignPattern p{a.rows(), a.cols(), {}, zero_tolerance};
  p.signs.reserve(a.entries().size());
  for (const T& v : a.entries()) p.signs.push_back(sign_of(v, zero_tolerance));
  return p;
}

template <Scalar T>
double zero_tolerance_for(const Matrix<T>& a, double rel) {
  if constexpr (is_exact_v<T>) {
    (void)a;
    (void)rel;
    return 0.0;
  } else {
    return rel * max_abs(a);
  }
}

template <Scalar T>
int s_minus(std::span<const T> x, double zero_tolerance) {
  int changes = 0;
  int last = 0;
  for (const T& v : x) {
    const int s = sign_of(v, zero_tolerance);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

template <Scalar T>
int s_plus(std::span<const T> x, double zero_tolerance) {
  if (x.empty()) return 0;
  // best[0] / best[1]: most changes so far with the current coordinate
  // read as -1 / +1; -1 marks an impossible state.
  std::array<int, 2> best{-1, -1};
  bool first = true;
  for (const T& v : x) {
    const int s = sign_of(v, zero_tolerance);
    std::array<int, 2> next{-1, -1};
    for (int c = 0; c < 2; ++c) {
      const int sign = c == 0 ? -1 : 1;
      if (s != 0 && s != sign) continue;
      if (first) {
        next[c] = 0;
        continue;
      }
      if (best[c] >= 0) next[c] = std::max(next[c], best[c]);
      if (best[1 - c] >= 0) next[c] = std::max(next[c], best[1 - c] + 1);
    }
    best = next;
    first = false;
  }
  return std::max(best[0], best[1]);
}

SignPartition SignPartition::from_signature(std::vector<int> signature) {
  SignPartition p;
  p.n = signature.size();
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (signature[i] != 1 && signature[i] != -1) throw std::invalid_argument("signature entries must be +1 or -1");
    if (signature[i] == 1) p.J.push_back(i + 1);
  }
  p.s = std::move(signature);
  return p;
}

SignPartition SignPartition::full(std::size_t n) { return from_signature(std::vector<int>(n, 1)); }

SignPartition SignPartition::canonical() const {
  if (s.empty() || s.front() == 1) return *this;
  std::vector<int> flipped = s;
  for (int& v : flipped) v = -v;
  return from_signature(std::move(flipped));
}

template <Scalar T>
std::optional<SignPartition> detect_sjs(const Matrix<T>& a, double zero_tolerance) {
  if (!a.is_square()) throw DimensionError("sign-symmetry detection needs a square matrix");
  const SignPattern p = sign_pattern(a, zero_tolerance);
  const std::size_t n = a.rows();
  if (p(0, 0) == 0) return std::nullopt;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = p(i, 0) * p(0, 0);
    if (s[i] == 0) return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s[i] * s[j] * p(i, j) != 1) return std::nullopt;
  return SignPartition::from_signature(std::move(s)).canonical();
}

template <Scalar T>
std::optional<SignPartition> detect_js(const Matrix<T>& a, double zero_tolerance) {
  if (!a.is_square()) throw DimensionError("sign-symmetry detection needs a square matrix");
  const SignPattern p = sign_pattern(a, zero_tolerance);
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (p(i, i) < 0) return std::nullopt;

  std::vector<int> colour(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    colour[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u) continue;
        // Each nonzero entry in either direction constrains s_u s_v.
        for (int parity : {p(u, v), p(v, u)}) {
          if (parity == 0) continue;
          const int want = colour[u] * parity;
          if (colour[v] == 0) {
            colour[v] = want;
            queue.push_back(v);
          } else if (colour[v] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return SignPartition::from_signature(std::move(colour));
}

template <Scalar T>
Matrix<T> signature_conjugate(const Matrix<T>& a, const SignPartition& partition) {
  if (!a.is_square() || partition.n != a.rows()) throw DimensionError("partition does not match matrix");
  Matrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (partition.s[i] * partition.s[j] < 0) out(i, j) = -a(i, j);
  return out;
}

template <Scalar T>
Matrix<T> checkerboard(const Matrix<T>& a) {
  Matrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if ((i + j) % 2 == 1) out(i, j) = -a(i, j);
  return out;
}

#define EVTP_INSTANTIATE(T)                                                         \
  template SignPattern sign_pattern(const Matrix<T>&, double);                      \
  template double zero_tolerance_for(const Matrix<T>&, double);                     \
  template int s_minus(std::span<const T>, double);                                 \
  template int s_plus(std::span<const T>, double);                                  \
  template std::optional<SignPartition> detect_sjs(const Matrix<T>&, double);       \
  template std::optional<SignPartition> detect_js(const Matrix<T>&, double);        \
  template Matrix<T> signature_conjugate(const Matrix<T>&, const SignPartition&);   \
  template Matrix<T> checkerboard(const Matrix<T>&);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
