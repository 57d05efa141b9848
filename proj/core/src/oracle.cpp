#include "jacring/oracle.hpp"

#include <map>
#include <unordered_map>
#include <variant>

#include "jacring/errors.hpp"

namespace jacring {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

using ColumnIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

ColumnIndex index_columns(const std::vector<Monomial>& columns) {
  ColumnIndex index;
  for (std::size_t c = 0; c < columns.size(); ++c) index.emplace(columns[c], c);
  return index;
}

// Dense arithmetic policies. Kept separate from Field so the oracle shares no
// arithmetic code path with the engine beyond reading input coefficients.
struct FpOps {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T from(const Coefficient& c) const { return c.residue(); }
  bool is_zero(T a) const { return a == 0; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
  // a - f*b
  T sub_mul(T a, T f, T b) const {
    const std::uint64_t prod = static_cast<std::uint64_t>(f) * b % p;
    return static_cast<T>((a + p - prod) % p);
  }
  T inv(T a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<T>(result);
  }
};

struct QOps {
  using T = mpq_class;

  T zero() const { return 0; }
  T from(const Coefficient& c) const { return c.rational_value(); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub_mul(const T& a, const T& f, const T& b) const { return a - f * b; }
  T inv(const T& a) const { return 1 / a; }
};

// Semi-echelon form: every stored row has its first nonzero entry, equal to
// 1, at its pivot column.
template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;

  Echelon(Ops ops, std::size_t width) : ops_(std::move(ops)), width_(width) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t width() const { return width_; }

  // Clears v at every pivot column.
  void reduce(std::vector<T>& v) const {
    for (const auto& [col, row] : pivots_) {
      if (ops_.is_zero(v[col])) continue;
      const T f = v[col];
      for (std::size_t j = col; j < width_; ++j) {
        if (!ops_.is_zero(row[j])) v[j] = ops_.sub_mul(v[j], f, row[j]);
      }
    }
  }

  bool insert(std::vector<T> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < width_ && ops_.is_zero(v[lead])) ++lead;
    if (lead == width_) return false;
    const T scale = ops_.inv(v[lead]);
    for (std::size_t j = lead; j < width_; ++j) v[j] = ops_.mul(v[j], scale);
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

 private:
  Ops ops_;
  std::size_t width_;
  std::map<std::size_t, std::vector<T>> pivots_;
};

template <class Ops>
Echelon<Ops> echelon_of(const Ops& ops, const RingContext& ring, std::span<const Polynomial> gens,
                        int degree, const std::vector<Monomial>& columns, const ColumnIndex& index) {
  Echelon<Ops> ech(ops, columns.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int shift = degree - g.degree(ring);
    if (shift < 0) continue;
    for (const auto& m : ring.monomials_of_degree(shift)) {
      std::vector<typename Ops::T> row(columns.size(), ops.zero());
      for (const auto& t : g.terms()) row[index.at(t.monomial * m)] = ops.from(t.coeff);
      ech.insert(std::move(row));
      if (ech.rank() == columns.size()) return ech;
    }
  }
  return ech;
}

std::int64_t bareiss_rank(const MacaulayMatrix& matrix) {
  // Clear denominators row by row, then fraction-free elimination.
  std::vector<std::vector<mpz_class>> a;
  a.reserve(matrix.rows.size());
  for (const auto& row : matrix.rows) {
    mpz_class den = 1;
    for (const auto& c : row) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational_value().get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(row.size());
    for (const auto& c : row) {
      ints.emplace_back(c.rational_value().get_num() * (den / c.rational_value().get_den()));
    }
    a.push_back(std::move(ints));
  }
  const std::size_t nrows = a.size();
  const std::size_t ncols = matrix.columns.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && a[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace

MacaulayMatrix macaulay_matrix(const RingContext& ring, std::span<const Polynomial> generators,
                               int degree) {
  MacaulayMatrix matrix;
  matrix.degree = degree;
  matrix.columns = ring.monomials_of_degree(degree);
  const ColumnIndex index = index_columns(matrix.columns);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int shift = degree - g.degree(ring);
    if (shift < 0) continue;
    for (const auto& m : ring.monomials_of_degree(shift)) {
      std::vector<Coefficient> row(matrix.columns.size(), ring.field().zero());
      for (const auto& t : g.terms()) row[index.at(t.monomial * m)] = t.coeff;
      matrix.rows.push_back(std::move(row));
    }
  }
  return matrix;
}

std::int64_t matrix_rank(const Field& field, const MacaulayMatrix& matrix) {
  if (field.is_rational()) return bareiss_rank(matrix);
  Echelon<FpOps> ech(FpOps{field.characteristic()}, matrix.columns.size());
  for (const auto& row : matrix.rows) {
    std::vector<std::uint32_t> v;
    v.reserve(row.size());
    for (const auto& c : row) v.push_back(c.residue());
    ech.insert(std::move(v));
  }
  return static_cast<std::int64_t>(ech.rank());
}

std::int64_t macaulay_dim(const RingContext& ring, std::span<const Polynomial> generators, int k) {
  if (k < 0) return 0;
  return matrix_rank(ring.field(), macaulay_matrix(ring, generators, k));
}

// ---------------------------------------------------------------------------

struct MacaulayOracle::Impl {
  RingPtr ring;
  std::vector<Polynomial> gens;

  struct Level {
    std::vector<Monomial> columns;
    ColumnIndex index;
    std::variant<Echelon<FpOps>, Echelon<QOps>> echelon;
  };
  std::map<int, Level> levels;
  std::map<int, std::int64_t> ranks;

  Level& level(int degree) {
    if (auto it = levels.find(degree); it != levels.end()) return it->second;
    std::vector<Monomial> columns = ring->monomials_of_degree(degree);
    ColumnIndex index = index_columns(columns);
    const Field& field = ring->field();
    if (field.is_rational()) {
      auto ech = echelon_of(QOps{}, *ring, gens, degree, columns, index);
      return levels.emplace(degree, Level{std::move(columns), std::move(index), std::move(ech)})
          .first->second;
    }
    auto ech = echelon_of(FpOps{field.characteristic()}, *ring, gens, degree, columns, index);
    return levels.emplace(degree, Level{std::move(columns), std::move(index), std::move(ech)})
        .first->second;
  }

  template <class Ops>
  std::int64_t saturation_at(const Ops& ops, const Echelon<Ops>& top, const Level& lvl, int k, int n) {
    using T = typename Ops::T;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < lvl.columns.size(); ++c) {
      if (!top.is_pivot(c)) free_cols.push_back(c);
    }
    const std::vector<Monomial> source = ring->monomials_of_degree(k);
    if (free_cols.empty()) return static_cast<std::int64_t>(source.size());
    const std::size_t nv = ring->num_vars();
    // Row for f = m: the images of x_i^n * m in S_D / I_D for every i.
    Echelon<Ops> image(ops, nv * free_cols.size());
    for (const auto& m : source) {
      std::vector<T> row;
      row.reserve(nv * free_cols.size());
      for (std::size_t i = 0; i < nv; ++i) {
        Monomial shifted = m;
        shifted.set(i, static_cast<Monomial::Exponent>(m[i] + n));
        std::vector<T> v(lvl.columns.size(), ops.zero());
        v[lvl.index.at(shifted)] = T(1);
        top.reduce(v);
        for (auto c : free_cols) row.push_back(v[c]);
      }
      image.insert(std::move(row));
    }
    return static_cast<std::int64_t>(source.size() - image.rank());
  }

  std::int64_t saturation_for(int k, int n) {
    const Level& lvl = level(k + n);
    if (ring->field().is_rational()) {
      return saturation_at(QOps{}, std::get<1>(lvl.echelon), lvl, k, n);
    }
    return saturation_at(FpOps{ring->characteristic()}, std::get<0>(lvl.echelon), lvl, k, n);
  }
};

MacaulayOracle::MacaulayOracle(RingPtr ring, std::vector<Polynomial> generators)
    : impl_(std::make_unique<Impl>()) {
  impl_->ring = std::move(ring);
  impl_->gens = std::move(generators);
}

MacaulayOracle::~MacaulayOracle() = default;
MacaulayOracle::MacaulayOracle(MacaulayOracle&&) noexcept = default;
MacaulayOracle& MacaulayOracle::operator=(MacaulayOracle&&) noexcept = default;

std::int64_t MacaulayOracle::ideal_dim(int k) {
  if (k < 0) return 0;
  if (auto it = impl_->ranks.find(k); it != impl_->ranks.end()) return it->second;
  std::int64_t rank = 0;
  if (impl_->ring->field().is_rational()) {
    rank = macaulay_dim(*impl_->ring, impl_->gens, k);
  } else {
    rank = static_cast<std::int64_t>(std::get<0>(impl_->level(k).echelon).rank());
  }
  impl_->ranks.emplace(k, rank);
  return rank;
}

std::int64_t MacaulayOracle::quotient_dim(int k) {
  return monomial_count(impl_->ring->num_vars(), k) - ideal_dim(k);
}

std::int64_t MacaulayOracle::saturation_dim(int k, int bound) {
  if (k < 0) return 0;
  const int limit = bound + static_cast<int>(impl_->ring->num_vars());
  int n = std::max(0, bound - k);
  std::int64_t previous = impl_->saturation_for(k, n);
  while (k + n < limit) {
    ++n;
    const std::int64_t current = impl_->saturation_for(k, n);
    if (current == previous) return current;
    previous = current;
  }
  throw Error("saturation in degree " + std::to_string(k) +
              " did not stabilize below degree " + std::to_string(limit) + "; enlarge the bound");
}

std::int64_t degreewise_saturation_dim(const RingContext& ring,
                                       std::span<const Polynomial> generators, int k, int bound) {
  auto shared = std::make_shared<const RingContext>(ring);
  MacaulayOracle oracle(std::move(shared), std::vector<Polynomial>(generators.begin(), generators.end()));
  return oracle.saturation_dim(k, bound);
}

}  // namespace jacring
