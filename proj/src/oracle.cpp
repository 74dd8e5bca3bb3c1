#include "hullcount/oracle.hpp"

#include "hullcount/error.hpp"
#include "hullcount/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace hullcount {

ExactInt enumeration_work_estimate(int n, int k, int field_order) {
  if (k < 0 || k > n) return 0;
  ExactInt binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  return ipow(ExactInt(field_order), k * (n - k)) * binom;
}

void check_enumeration_feasible(int n, int k, int field_order, std::uint64_t work_limit) {
  const ExactInt estimate = enumeration_work_estimate(n, k, field_order);
  if (estimate > work_limit) {
    throw Error(ErrorKind::WorkLimitExceeded,
                "enumerating " + std::to_string(k) + "-subspaces of F_" + std::to_string(field_order) + "^" +
                    std::to_string(n) + " needs up to " + estimate.str() + " steps, limit is " +
                    std::to_string(work_limit));
  }
}

std::vector<std::vector<int>> pivot_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    // Colex successor: bump the lowest entry that has room below its neighbour.
    int i = 0;
    while (i < k) {
      const int ceiling = (i + 1 < k) ? c[static_cast<std::size_t>(i + 1)] : n;
      if (c[static_cast<std::size_t>(i)] + 1 < ceiling) break;
      ++i;
    }
    if (i == k) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
  }
  return out;
}

SubspaceIterator::SubspaceIterator(int n, int k, FiniteField field, std::vector<std::vector<int>> pivot_sets)
    : n_(n), k_(k), field_(std::move(field)), pivot_sets_(std::move(pivot_sets)), current_(field_, k, n) {}

SubspaceIterator::SubspaceIterator(int n, int k, FiniteField field, std::uint64_t work_limit)
    : SubspaceIterator(n, k, field, std::vector<std::vector<int>>{}) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::BadRange, "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  check_enumeration_feasible(n, k, field.order(), work_limit);
  pivot_sets_ = pivot_subsets(n, k);
}

SubspaceIterator SubspaceIterator::for_pivots(int n, FiniteField field, std::vector<int> pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < 0 || pivots[i] >= n || (i > 0 && pivots[i] <= pivots[i - 1])) {
      throw Error(ErrorKind::BadRange, "pivot columns must be strictly increasing and inside 0..n-1");
    }
  }
  const int k = static_cast<int>(pivots.size());
  return SubspaceIterator(n, k, std::move(field), std::vector<std::vector<int>>{std::move(pivots)});
}

void SubspaceIterator::load_pivot_set() {
  const auto& pivots = pivot_sets_[pivot_index_];
  free_cells_.clear();
  current_ = MatrixGF(field_, k_, n_);
  for (int r = 0; r < k_; ++r) {
    const int p = pivots[static_cast<std::size_t>(r)];
    current_(r, p) = field_.one();
    for (int c = p + 1; c < n_; ++c) {
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cells_.emplace_back(r, c);
    }
  }
  digits_.assign(free_cells_.size(), 0);
}

bool SubspaceIterator::advance_odometer() {
  const int Q = field_.order();
  for (std::size_t i = digits_.size(); i-- > 0;) {
    const auto [r, c] = free_cells_[i];
    if (++digits_[i] < Q) {
      current_(r, c) = FieldElem{static_cast<std::uint16_t>(digits_[i])};
      return true;
    }
    digits_[i] = 0;
    current_(r, c) = field_.zero();
  }
  return false;
}

bool SubspaceIterator::next() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    if (pivot_sets_.empty()) {
      exhausted_ = true;
      return false;
    }
    load_pivot_set();
    ++yielded_;
    return true;
  }
  if (advance_odometer()) {
    ++yielded_;
    return true;
  }
  if (++pivot_index_ >= pivot_sets_.size()) {
    exhausted_ = true;
    return false;
  }
  load_pivot_set();
  ++yielded_;
  return true;
}

ExactInt HullSpectrum::total() const {
  ExactInt sum = 0;
  for (const auto& [hull, count] : counts) sum += count;
  return sum;
}

ExactInt HullSpectrum::count(int hull) const {
  const auto it = counts.find(hull);
  return it == counts.end() ? ExactInt(0) : it->second;
}

HullSpectrum& HullSpectrum::merge(const HullSpectrum& other) {
  for (const auto& [hull, count] : other.counts) counts[hull] += count;
  return *this;
}

std::int64_t oracle_field_order(FormKind::Kind form, std::int64_t q) {
  return form == FormKind::Kind::Hermitian ? q * q : q;
}

HullSpectrum hull_spectrum(int n, int k, const FiniteField& field, const FormKind& form, const OracleOptions& options) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::BadRange, "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  HullSpectrum spectrum;
  spectrum.n = n;
  spectrum.k = k;
  spectrum.field_order = field.order();
  spectrum.form = form.kind();
  spectrum.q = field.order();
  if (form.kind() == FormKind::Kind::Hermitian) {
    spectrum.q = hermitian_subfield_order(field, form.subfield_order());
  }
  if (form.kind() == FormKind::Kind::Symplectic && n % 2 != 0) {
    throw Error(ErrorKind::OddAmbientForSymplectic, "ambient length " + std::to_string(n) + " is odd");
  }
  check_enumeration_feasible(n, k, field.order(), options.work_limit);

  const auto subsets = pivot_subsets(n, k);
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(subsets.size())));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));

  auto run = [&](unsigned worker) {
    auto& tally = partial[worker];
    for (std::size_t s = worker; s < subsets.size(); s += workers) {
      auto it = SubspaceIterator::for_pivots(n, field, subsets[s]);
      while (it.next()) ++tally[static_cast<std::size_t>(hull_dim(it.current(), form))];
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  for (const auto& tally : partial) {
    HullSpectrum part;
    for (int h = 0; h <= k; ++h) {
      if (tally[static_cast<std::size_t>(h)] != 0) part.counts[h] = tally[static_cast<std::size_t>(h)];
    }
    spectrum.merge(part);
  }
  return spectrum;
}

void write_spectrum_csv(std::ostream& os, const HullSpectrum& spectrum) {
  for (const auto& [hull, count] : spectrum.counts) {
    os << spectrum.n << ',' << spectrum.k << ',' << spectrum.q << ',' << to_string(spectrum.form) << ',' << hull
       << ',' << count.str() << '\n';
  }
}

bool SpectrumCheck::passed() const {
  if (!sum_ok()) return false;
  return std::all_of(cells.begin(), cells.end(), [](const SpectrumCell& c) { return c.matches(); });
}

std::vector<std::string> SpectrumCheck::diff() const {
  std::vector<std::string> out;
  const std::string where = std::string(to_string(form)) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            ", q=" + std::to_string(q) + ")";
  for (const auto& c : cells) {
    if (!c.matches()) {
      out.push_back(where + " l=" + std::to_string(c.hull) + ": oracle " + c.oracle.str() + " vs formula " +
                    c.formula->str());
    }
  }
  if (!sum_ok()) {
    out.push_back(where + ": oracle total " + oracle_total.str() + " vs Gaussian binomial " + expected_total.str());
  }
  return out;
}

SpectrumCheck spectrum_vs_formula(int n, int k, std::int64_t q, FormKind::Kind form, const CheckOptions& options) {
  const auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  const std::int64_t order = oracle_field_order(form, q);
  if (order > kDefaultMaxFieldOrder) {
    throw Error(ErrorKind::DegreeTooLarge, "oracle field order " + std::to_string(order) + " exceeds the limit");
  }
  const FiniteField field = make_field_of_order(static_cast<int>(order));
  FormKind kind = FormKind::euclidean();
  if (form == FormKind::Kind::Hermitian) kind = FormKind::hermitian(static_cast<int>(q));
  if (form == FormKind::Kind::Symplectic) kind = FormKind::symplectic();

  const HullSpectrum spectrum = hull_spectrum(n, k, field, kind, options.oracle);

  SpectrumCheck check{form, n, k, q, {}, spectrum.total(), gaussian_binomial(n, k, order)};
  const int max_hull = std::min(k, n - k);
  for (int hull = 0; hull <= k; ++hull) {
    // Hull dimensions past min(k, n-k) are impossible; list them only if the oracle saw one.
    if (hull > max_hull && spectrum.count(hull) == 0) continue;
    SpectrumCell cell{hull, spectrum.count(hull), std::nullopt};
    if (form == FormKind::Kind::Hermitian) cell.formula = count_hermitian({n, k, hull, q});
    if (form == FormKind::Kind::Symplectic) cell.formula = count_symplectic({n / 2, k, hull, q});
    if (options.corrupt_formula && cell.formula && hull == 0) *cell.formula += 1;
    check.cells.push_back(std::move(cell));
  }
  return check;
}

}  // namespace hullcount
