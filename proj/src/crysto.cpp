#include "vsym/crysto.hpp"

#include <algorithm>

namespace vsym {

PairIndexer::PairIndexer(int n) : n_(n), table_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), -1) {
  if (n < 1) fail_domain("pair index needs n >= 1");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      table_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
    }
}

int PairIndexer::index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j)
    throw RangeError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not 1 <= i < j <= " +
                     std::to_string(n_));
  return table_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

namespace {

SignedPerm pair_action_impl(const Permutation& s, bool with_sign) {
  const PairIndexer idx(s.degree());
  SignedPerm a;
  for (int k = 0; k < idx.dim(); ++k) {
    auto [i, j] = idx.pair(k);
    const int p = s(i - 1) + 1, q = s(j - 1) + 1;
    a.target.push_back(idx.index(std::min(p, q), std::max(p, q)));
    a.sign.push_back(with_sign && p > q ? -1 : 1);
  }
  return a;
}

bool is_signed_permutation(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    int hits = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      if (m(r, c) != 1 && m(r, c) != -1) return false;
      ++hits;
    }
    if (hits != 1) return false;
  }
  return (m.cwiseAbs().rowwise().sum().array() == 1).all();
}

}  // namespace

SignedPerm pair_action(const Permutation& s) { return pair_action_impl(s, true); }
SignedPerm unsigned_pair_action(const Permutation& s) { return pair_action_impl(s, false); }

Eigen::MatrixXi to_matrix(const SignedPerm& a) {
  const auto d = static_cast<Eigen::Index>(a.target.size());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) m(a.target[k], k) = a.sign[k];
  return m;
}

std::vector<int> adjacent_word(const Permutation& s) {
  std::vector<int> img = s.images();
  std::vector<int> peeled;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < img.size(); ++i)
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);  // cur <- cur o tau_{i+1}
        peeled.push_back(static_cast<int>(i) + 1);
        again = true;
      }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

ActionSpec::ActionSpec(int n, std::vector<Eigen::MatrixXi> generators) : n_(n), gens_(std::move(generators)) {
  if (n < 2) fail_domain("action needs n >= 2");
  if (static_cast<int>(gens_.size()) != n - 1)
    fail_domain("expected " + std::to_string(n - 1) + " generator matrices, got " + std::to_string(gens_.size()));
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].rows() != dim() || gens_[i].cols() != dim())
      fail_domain("matrix for tau" + std::to_string(i + 1) + " must be " + std::to_string(dim()) + "x" +
                  std::to_string(dim()));
    if (!is_signed_permutation(gens_[i]))
      fail_domain("matrix for tau" + std::to_string(i + 1) + " is not a signed permutation matrix");
  }
}

ActionSpec ActionSpec::virtual_triplet(int n) {
  if (n < 2) fail_domain("action needs n >= 2");
  std::vector<Eigen::MatrixXi> g;
  for (int i = 1; i < n; ++i) g.push_back(to_matrix(pair_action(Permutation::adjacent(n, i))));
  return ActionSpec(n, std::move(g));
}

Eigen::MatrixXi ActionSpec::matrix(const Permutation& s) const {
  if (s.degree() != n_) fail_domain("permutation degree differs from the action rank");
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(dim(), dim());
  for (int l : adjacent_word(s)) m = m * generator(l);
  return m;
}

bool ActionSpec::coxeter_relations_hold() const {
  const Eigen::MatrixXi one = Eigen::MatrixXi::Identity(dim(), dim());
  for (int i = 1; i < n_; ++i) {
    if (generator(i) * generator(i) != one) return false;
    for (int j = i + 1; j < n_; ++j) {
      Eigen::MatrixXi p = generator(i) * generator(j);
      Eigen::MatrixXi q = j == i + 1 ? Eigen::MatrixXi(p * p * p) : Eigen::MatrixXi(p * p);
      if (q != one) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> orbit_representatives(const Permutation& s) {
  const PairIndexer idx(s.degree());
  const SignedPerm a = pair_action(s);
  std::vector<char> seen(idx.dim(), 0);
  std::vector<std::pair<int, int>> reps;
  for (int k = 0; k < idx.dim(); ++k) {
    if (seen[k]) continue;
    reps.push_back(idx.pair(k));
    for (int c = k; !seen[c]; c = a.target[c]) seen[c] = 1;
  }
  return reps;
}

std::vector<TorsionBlock> torsion_blocks(int n, const std::vector<int>& cycle_type) {
  if (n < 2) fail_domain("torsion elements need n >= 2");
  int used = 0;
  for (int m : cycle_type) {
    if (m < 2) fail_domain("cycle lengths must be at least 2");
    used += m;
  }
  if (used > n) fail_domain("cycle lengths sum to " + std::to_string(used) + " > n = " + std::to_string(n));
  const PairIndexer idx(n);
  std::vector<TorsionBlock> blocks;
  int b = 1;
  for (int m : cycle_type) {
    TorsionBlock blk;
    blk.start = b;
    blk.length = m;
    blk.theta = Permutation::identity(n);
    for (int i = b; i <= b + m - 2; ++i) blk.theta = blk.theta * Permutation::adjacent(n, i);
    const SignedPerm a = pair_action(blk.theta);
    const int first = idx.index(b, b + 1);
    int cur = first, sign = 1;
    do {
      blk.orbit.push_back(idx.pair(cur));
      blk.sign.push_back(sign);
      sign *= a.sign[cur];
      cur = a.target[cur];
    } while (cur != first);
    blk.closure = sign;
    if (blk.closure == 1)
      blk.solved = static_cast<int>(std::max_element(blk.orbit.begin(), blk.orbit.end()) - blk.orbit.begin());
    blocks.push_back(std::move(blk));
    b += m;
  }
  return blocks;
}

int torsion_free_parameters(int n, const std::vector<int>& cycle_type) {
  int f = 0;
  for (const auto& b : torsion_blocks(n, cycle_type)) f += b.free_count();
  return f;
}

FaithfulnessReport holonomy_faithful(int n, bool signed_action, int max_n) {
  if (n < 2) fail_domain("holonomy check needs n >= 2");
  if (n > max_n)
    throw BudgetError("holonomy check over S_" + std::to_string(n) + " exceeds the limit n <= " +
                      std::to_string(max_n));
  FaithfulnessReport rep;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  while (std::next_permutation(img.begin(), img.end())) {
    const Permutation s(img);
    ++rep.checked;
    const SignedPerm a = signed_action ? pair_action(s) : unsigned_pair_action(s);
    bool trivial = true;
    for (std::size_t k = 0; k < a.target.size() && trivial; ++k)
      trivial = a.target[k] == static_cast<int>(k) && a.sign[k] == 1;
    if (trivial) {
      rep.faithful = false;
      rep.kernel_element = s;
      break;
    }
  }
  return rep;
}

}  // namespace vsym
