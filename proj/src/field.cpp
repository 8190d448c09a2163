#include "gfp/field.hpp"

#include <algorithm>

#include "gfp/errors.hpp"

namespace gfp {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp mod_inverse(Fp a, unsigned p) {
  // Fermat: a^(p-2) mod p.
  unsigned result = 1;
  unsigned base = a % p;
  unsigned e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Fp>(result);
}

FieldVector vec_add(const FieldVector& a, const FieldVector& b, unsigned p) {
  FieldVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Fp>((a[i] + b[i]) % p);
  }
  return out;
}

FieldVector vec_neg(const FieldVector& a, unsigned p) {
  FieldVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Fp>((p - a[i]) % p);
  }
  return out;
}

FieldVector vec_scale(const FieldVector& a, Fp c, unsigned p) {
  FieldVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Fp>(a[i] * c % p);
  }
  return out;
}

bool vec_is_zero(const FieldVector& a) {
  return std::all_of(a.begin(), a.end(), [](Fp x) { return x == 0; });
}

std::string vec_to_string(const FieldVector& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(a[i]));
  }
  s += "]";
  return s;
}

FieldMatrix FieldMatrix::identity(unsigned p, std::size_t n) {
  FieldMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& other) const {
  FieldMatrix out(p, rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      Fp aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols; ++j) {
        out.at(i, j) =
            static_cast<Fp>((out.at(i, j) + aik * other.at(k, j)) % p);
      }
    }
  }
  return out;
}

FieldVector FieldMatrix::apply(const FieldVector& v) const {
  FieldVector out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      acc += at(i, j) * v[j];
    }
    out[i] = static_cast<Fp>(acc % p);
  }
  return out;
}

std::optional<FieldMatrix> FieldMatrix::try_inverse() const {
  if (rows != cols) return std::nullopt;
  std::size_t n = rows;
  FieldMatrix work = *this;
  FieldMatrix inv = identity(p, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Fp scale = mod_inverse(work.at(col, col), p);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) = static_cast<Fp>(work.at(col, j) * scale % p);
      inv.at(col, j) = static_cast<Fp>(inv.at(col, j) * scale % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Fp factor = work.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) = static_cast<Fp>(
            (work.at(r, j) + (p - factor) * work.at(col, j)) % p);
        inv.at(r, j) = static_cast<Fp>(
            (inv.at(r, j) + (p - factor) * inv.at(col, j)) % p);
      }
    }
  }
  return inv;
}

std::vector<FieldVector> row_reduce(std::vector<FieldVector> vectors,
                                    unsigned p) {
  if (vectors.empty()) return {};
  std::size_t dim = vectors[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < vectors.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && vectors[pivot][col] == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pivot]);
    Fp scale = mod_inverse(vectors[rank][col], p);
    vectors[rank] = vec_scale(vectors[rank], scale, p);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r == rank || vectors[r][col] == 0) continue;
      Fp factor = vectors[r][col];
      FieldVector sub = vec_scale(vectors[rank], static_cast<Fp>(p - factor), p);
      vectors[r] = vec_add(vectors[r], sub, p);
    }
    ++rank;
  }
  vectors.resize(rank);
  return vectors;
}

bool same_subspace(const std::vector<FieldVector>& a,
                   const std::vector<FieldVector>& b, unsigned p) {
  return row_reduce(a, p) == row_reduce(b, p);
}

std::vector<FieldVector> span_vectors(const std::vector<FieldVector>& basis,
                                      unsigned p, std::size_t dim) {
  std::vector<FieldVector> out;
  std::size_t k = basis.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  out.reserve(total);
  std::vector<Fp> coeff(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    FieldVector v(dim, 0);
    std::size_t rem = idx;
    for (std::size_t i = 0; i < k; ++i) {
      Fp c = static_cast<Fp>(rem % p);
      rem /= p;
      if (c != 0) v = vec_add(v, vec_scale(basis[i], c, p), p);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Fp> poly_mul(const std::vector<Fp>& a, const std::vector<Fp>& b,
                         unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<Fp> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<Fp>((out[i + j] + a[i] * b[j]) % p);
    }
  }
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SingularRho: return "SingularRho";
    case ErrorCode::ZeroOmega: return "ZeroOmega";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::NotAFactorization: return "NotAFactorization";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::BadDigit: return "BadDigit";
    case ErrorCode::BadVector: return "BadVector";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::InsufficientDepth: return "InsufficientDepth";
    case ErrorCode::TooShallow: return "TooShallow";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace gfp
