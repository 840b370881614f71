#include "bipnet/linkpred.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "bipnet/error.hpp"
#include "bipnet/matrices.hpp"

namespace bipnet {

namespace {

struct MethodInfo {
  Method method;
  std::string_view name;
};

constexpr MethodInfo kMethods[] = {
    {Method::pa, "pa"},         {Method::cn, "cn"},         {Method::p3, "p3"},
    {Method::poly, "poly"},     {Method::polyn, "polyn"},   {Method::neu, "neu"},
    {Method::sinh, "sinh"},     {Method::exp, "exp"},       {Method::neumann, "neumann"},
    {Method::n_poly, "n-poly"}, {Method::n_polyn, "n-polyn"}, {Method::n_neu, "n-neu"},
    {Method::n_heat, "n-heat"}, {Method::com, "com"},       {Method::heat, "heat"},
    {Method::random, "random"},
};

// Which matrix a spectral method is a function of.
enum class Base { none, adjacency, normalized, laplacian };

Base base_of(Method m) {
  switch (m) {
    case Method::poly:
    case Method::polyn:
    case Method::neu:
    case Method::sinh:
    case Method::exp:
    case Method::neumann: return Base::adjacency;
    case Method::n_poly:
    case Method::n_polyn:
    case Method::n_neu:
    case Method::n_heat: return Base::normalized;
    case Method::com:
    case Method::heat: return Base::laplacian;
    default: return Base::none;
  }
}

bool is_odd(Method m) {
  switch (m) {
    case Method::poly:
    case Method::polyn:
    case Method::neu:
    case Method::sinh:
    case Method::n_poly:
    case Method::n_polyn:
    case Method::n_neu:
    case Method::n_heat: return true;
    default: return false;
  }
}

bool is_neumann(Method m) { return m == Method::neu || m == Method::n_neu || m == Method::neumann; }

// Which end of the spectrum a rank-r truncation keeps.
enum class Keep { magnitude, largest, smallest };

Keep keep_of(Method m) {
  if (base_of(m) == Base::laplacian) return Keep::smallest;
  if (m == Method::exp || m == Method::neumann) return Keep::largest;
  return Keep::magnitude;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double odd_polynomial(const std::vector<double>& c, double x) {
  const double x2 = x * x;
  double power = x;
  double sum = 0.0;
  for (double a : c) {
    sum += a * power;
    power *= x2;
  }
  return sum;
}

std::function<double(double)> scalar_function(Method m, double alpha, const std::vector<double>& coef,
                                              double zero_threshold) {
  switch (m) {
    case Method::poly:
    case Method::polyn:
    case Method::n_poly:
    case Method::n_polyn: return [coef](double x) { return odd_polynomial(coef, x); };
    case Method::neu:
    case Method::n_neu: return [alpha](double x) { return alpha * x / (1.0 - alpha * alpha * x * x); };
    case Method::sinh:
    case Method::n_heat: return [alpha](double x) { return std::sinh(alpha * x); };
    case Method::exp: return [alpha](double x) { return std::exp(alpha * x); };
    case Method::neumann: return [alpha](double x) { return 1.0 / (1.0 - alpha * x); };
    case Method::heat: return [alpha](double x) { return std::exp(-alpha * x); };
    // Pseudoinverse over the nonzero part of the spectrum; training graphs
    // are routinely disconnected, so zero eigenvalues are skipped rather than
    // rejected.
    case Method::com: return [zero_threshold](double x) { return x > zero_threshold ? 1.0 / x : 0.0; };
    default: break;
  }
  throw Error(ErrorKind::invalid_input, "method has no matrix function");
}

int default_rank(int dim) { return std::max(1, std::min(64, dim - 1)); }

Spectrum keep_columns(const Spectrum& s, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s.eigenvalues[a] < s.eigenvalues[b]; });
  Spectrum out;
  out.dimension = s.dimension;
  out.eigenvectors.resize(s.dimension, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.eigenvalues.push_back(s.eigenvalues[idx[i]]);
    out.eigenvectors.col(static_cast<Eigen::Index>(i)) = s.eigenvectors.col(static_cast<Eigen::Index>(idx[i]));
    out.converged.push_back(s.converged[idx[i]]);
    out.residual_norms.push_back(s.residual_norms[idx[i]]);
  }
  return out;
}

Spectrum truncate(const Spectrum& s, int rank, Keep keep) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto key = [&](std::size_t i) {
    switch (keep) {
      case Keep::magnitude: return -std::abs(s.eigenvalues[i]);
      case Keep::largest: return -s.eigenvalues[i];
      case Keep::smallest: break;
    }
    return s.eigenvalues[i];
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  idx.resize(std::min(idx.size(), static_cast<std::size_t>(rank)));
  return keep_columns(s, std::move(idx));
}

// Rank-r (or exact) eigen-decomposition of a symmetric matrix.
Spectrum decompose(const SparseMatrix& m, Keep keep, std::optional<int> rank, const SolverConfig& cfg, int& used_rank) {
  const int n = m.rows();
  if (n <= cfg.dense_threshold) {
    const Spectrum full = dense_spectrum(m, cfg);
    used_rank = rank ? std::min(*rank, n) : n;
    return rank ? truncate(full, used_rank, keep) : full;
  }
  used_rank = std::min(rank.value_or(default_rank(n)), n);
  if (keep == Keep::largest) return eigenpairs(m, used_rank, Extremal::max, cfg);
  if (keep == Keep::smallest) return eigenpairs(m, used_rank, Extremal::min, cfg);
  const Spectrum hi = eigenpairs(m, used_rank, Extremal::max, cfg);
  const Spectrum lo = eigenpairs(m, std::min(used_rank, n - used_rank), Extremal::min, cfg);
  Spectrum both;
  both.dimension = n;
  both.eigenvectors.resize(n, static_cast<Eigen::Index>(hi.size() + lo.size()));
  both.eigenvectors << lo.eigenvectors, hi.eigenvectors;
  for (const Spectrum* s : {&lo, &hi}) {
    both.eigenvalues.insert(both.eigenvalues.end(), s->eigenvalues.begin(), s->eigenvalues.end());
    both.converged.insert(both.converged.end(), s->converged.begin(), s->converged.end());
    both.residual_norms.insert(both.residual_norms.end(), s->residual_norms.begin(), s->residual_norms.end());
  }
  return truncate(both, used_rank, keep);
}

double spectral_radius(const Spectrum& s) {
  double r = 0.0;
  for (double v : s.eigenvalues) r = std::max(r, std::abs(v));
  return r;
}

double largest_value(const Spectrum& s) {
  return s.eigenvalues.empty() ? 0.0 : *std::max_element(s.eigenvalues.begin(), s.eigenvalues.end());
}

void check_coefficients(Method m, const std::vector<double>& c) {
  if (c.empty()) throw Error(ErrorKind::invalid_input, "polynomial methods need at least one coefficient");
  if ((m == Method::polyn || m == Method::n_polyn) &&
      std::any_of(c.begin(), c.end(), [](double a) { return a < 0.0; }))
    throw Error(ErrorKind::domain, "nonnegative polynomial methods reject negative coefficients");
}

double resolve_alpha(Method m, const KernelParams& p, double lambda_max) {
  double alpha = 1.0;
  if (p.alpha) alpha = *p.alpha;
  else if (is_neumann(m)) alpha = lambda_max > 0.0 ? 0.5 / lambda_max : 1.0;
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::domain, "alpha must be positive");
  // Boundary is excluded with a little slack for eigenvalue rounding.
  if (is_neumann(m) && !(alpha * lambda_max < 1.0 - 1e-10))
    throw Error(ErrorKind::domain, "alpha outside the Neumann convergence region (alpha * lambda_max >= 1)");
  return alpha;
}

double uniform_hash(std::uint64_t seed, NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  const std::uint64_t h = splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& info : kMethods)
    if (info.method == m) return info.name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& info : kMethods)
    if (info.name == name) return info.method;
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632BE59BD9B4E019ull));
}

struct ScoreModel::State {
  NodeId split = 0;  // left count for bipartite models
  std::vector<double> degree;
  std::optional<Graph> graph;          // cn
  std::optional<SparseMatrix> b, bt;   // p3
  std::optional<MatrixFunction> function;
  std::uint64_t seed = 0;
};

double ScoreModel::entry(NodeId i, NodeId j) const {
  const State& s = *state_;
  const auto n = static_cast<NodeId>(s.degree.size());
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorKind::invalid_input, "node id out of range");
  switch (method_) {
    case Method::pa: return s.degree[i] * s.degree[j];
    case Method::random: return uniform_hash(s.seed, i, j);
    case Method::cn: return score_common_neighbors(*s.graph, i, j);
    case Method::p3: {
      if ((i < s.split) == (j < s.split)) throw Error(ErrorKind::invalid_input, "p3 needs a left and a right node");
      const NodeId u = std::min(i, j);
      const NodeId v = std::max(i, j) - s.split;
      double total = 0.0;
      const auto ys = s.b->row_cols(u);
      const auto wy = s.b->row_values(u);
      for (std::size_t a = 0; a < ys.size(); ++a) {
        const auto xs = s.bt->row_cols(ys[a]);
        const auto wx = s.bt->row_values(ys[a]);
        for (std::size_t c = 0; c < xs.size(); ++c) total += wy[a] * wx[c] * s.b->entry(xs[c], v);
      }
      return total;
    }
    default: break;
  }
  if (s.degree[i] == 0.0 || s.degree[j] == 0.0) return 0.0;
  return s.function->entry(i, j);
}

double ScoreModel::score(NodeId u, NodeId v) const {
  if (!bipartite_) return entry(u, v);
  const NodeId right = static_cast<NodeId>(state_->degree.size()) - state_->split;
  if (u < 0 || u >= state_->split || v < 0 || v >= right) throw Error(ErrorKind::invalid_input, "node id out of range");
  return entry(u, state_->split + v);
}

ScoreModel fit_kernel(const Graph& g, Method m, const KernelParams& params, const SolverConfig& cfg) {
  cfg.validate();
  if (g.directed()) throw Error(ErrorKind::invalid_input, "link prediction needs an undirected graph");
  if (m == Method::p3) throw Error(ErrorKind::invalid_input, "p3 is defined for bipartite graphs only");
  ScoreModel model;
  model.method_ = m;
  auto state = std::make_shared<ScoreModel::State>();
  state->degree.assign(g.degrees().begin(), g.degrees().end());
  state->split = g.node_count();
  state->seed = params.seed;
  if (m == Method::cn) state->graph = g;

  const Base base = base_of(m);
  if (base != Base::none) {
    if (m == Method::poly || m == Method::polyn || m == Method::n_poly || m == Method::n_polyn) {
      check_coefficients(m, params.poly_coefficients);
      model.coefficients_ = params.poly_coefficients;
    }
    const SparseMatrix mat = base == Base::adjacency    ? adjacency(g)
                             : base == Base::normalized ? normalized_adjacency(g)
                                                        : laplacian(g);
    const Spectrum dec = decompose(mat, keep_of(m), params.rank, cfg, model.rank_);
    const double radius = m == Method::neumann ? largest_value(dec) : spectral_radius(dec);
    model.alpha_ = (m == Method::com) ? 0.0 : resolve_alpha(m, params, radius);
    state->function =
        apply_matrix_function(dec, scalar_function(m, model.alpha_, model.coefficients_, laplacian_zero_threshold(dec)));
  }
  model.state_ = std::move(state);
  return model;
}

ScoreModel fit_kernel(const BipartiteGraph& g, Method m, const KernelParams& params, const SolverConfig& cfg) {
  cfg.validate();
  if (m == Method::cn)
    throw Error(ErrorKind::invalid_input, "common neighbors is zero on every left-right pair of a bipartite graph");
  ScoreModel model;
  model.method_ = m;
  model.bipartite_ = true;
  auto state = std::make_shared<ScoreModel::State>();
  state->split = g.left_count();
  state->seed = params.seed;
  for (NodeId u = 0; u < g.left_count(); ++u) state->degree.push_back(g.left_degree(u));
  for (NodeId v = 0; v < g.right_count(); ++v) state->degree.push_back(g.right_degree(v));
  if (m == Method::p3) {
    state->b = biadjacency(g);
    state->bt = state->b->transpose();
  }

  const Base base = base_of(m);
  if (base != Base::none) {
    if (m == Method::poly || m == Method::polyn || m == Method::n_poly || m == Method::n_polyn) {
      check_coefficients(m, params.poly_coefficients);
      model.coefficients_ = params.poly_coefficients;
    }
    if (is_odd(m)) {
      // Odd functions of A reduce to the off-diagonal block U f(S) V^T.
      const SparseMatrix b = base == Base::adjacency ? biadjacency(g) : normalized_biadjacency(g);
      const int dim = std::min(b.rows(), b.cols());
      const bool dense = std::max(b.rows(), b.cols()) <= cfg.dense_threshold;
      model.rank_ = params.rank ? std::min(*params.rank, dim) : (dense ? dim : default_rank(dim));
      const SingularTriplets t = truncated_svd(b, model.rank_, cfg);
      model.alpha_ = resolve_alpha(m, params, t.singular_values.front());
      state->function = apply_matrix_function(t, scalar_function(m, model.alpha_, model.coefficients_, 0.0));
    } else {
      const Graph flat = g.as_unipartite();
      const SparseMatrix mat = base == Base::adjacency ? adjacency(flat) : laplacian(flat);
      const Spectrum dec = decompose(mat, keep_of(m), params.rank, cfg, model.rank_);
      const double radius = m == Method::neumann ? largest_value(dec) : spectral_radius(dec);
      model.alpha_ = (m == Method::com) ? 0.0 : resolve_alpha(m, params, radius);
      state->function = apply_matrix_function(
          dec, scalar_function(m, model.alpha_, model.coefficients_, laplacian_zero_threshold(dec)));
    }
  }
  model.state_ = std::move(state);
  return model;
}

double score_pa(const Graph& g, NodeId u, NodeId v) { return g.degree(u) * g.degree(v); }

double score_pa(const BipartiteGraph& g, NodeId u, NodeId v) { return g.left_degree(u) * g.right_degree(v); }

double score_common_neighbors(const Graph& g, NodeId u, NodeId v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(count);
}

double score_p3(const BipartiteGraph& g, NodeId u, NodeId v) {
  if (u < 0 || u >= g.left_count() || v < 0 || v >= g.right_count())
    throw Error(ErrorKind::invalid_input, "p3 needs a left node and a right node");
  return fit_kernel(g, Method::p3, {}, {}).score(u, v);
}

double auc(std::span<const double> positive, std::span<const double> negative) {
  if (positive.empty() || negative.empty()) throw Error(ErrorKind::invalid_input, "AUC needs nonempty score lists");
  struct Item {
    double score;
    bool positive;
  };
  std::vector<Item> all;
  all.reserve(positive.size() + negative.size());
  for (double s : positive) all.push_back({s, true});
  for (double s : negative) all.push_back({s, false});
  std::sort(all.begin(), all.end(), [](const Item& a, const Item& b) { return a.score < b.score; });
  // Wins counted per tie group: negatives strictly below plus half the tied ones.
  double wins = 0.0;
  std::size_t below_neg = 0;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    std::size_t pos = 0, neg = 0;
    while (j < all.size() && all[j].score == all[i].score) {
      (all[j].positive ? pos : neg)++;
      ++j;
    }
    wins += static_cast<double>(pos) * (static_cast<double>(below_neg) + 0.5 * static_cast<double>(neg));
    below_neg += neg;
    i = j;
  }
  return wins / (static_cast<double>(positive.size()) * static_cast<double>(negative.size()));
}

void SplitSpec::validate() const {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw Error(ErrorKind::invalid_input, "train_fraction must lie strictly between 0 and 1");
}

namespace {

// Indices of edges assigned to training, in original edge order, and the
// remaining test indices.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_indices(std::span<const Edge> edges,
                                                                            const SplitSpec& spec) {
  spec.validate();
  const std::size_t m = edges.size();
  if (m < 4) throw Error(ErrorKind::invalid_input, "split needs at least 4 edges");
  const auto train = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(spec.train_fraction * static_cast<double>(m))), 1, m - 1);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (spec.temporal) {
    for (const Edge& e : edges)
      if (!e.time) throw Error(ErrorKind::invalid_input, "temporal split needs a timestamp on every edge");
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return *edges[a].time < *edges[b].time; });
  } else {
    std::mt19937_64 rng(spec.seed);
    for (std::size_t i = m - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
  }
  std::vector<std::size_t> tr(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train));
  std::vector<std::size_t> te(order.begin() + static_cast<std::ptrdiff_t>(train), order.end());
  if (!spec.temporal) {
    std::sort(tr.begin(), tr.end());
    std::sort(te.begin(), te.end());
  }
  return {tr, te};
}

}  // namespace

EdgeSplit<Graph> split(const Graph& g, const SplitSpec& spec) {
  const auto [tr, te] = split_indices(g.edges(), spec);
  std::vector<Edge> train;
  for (std::size_t i : tr) train.push_back(g.edges()[i]);
  std::vector<Edge> test;
  for (std::size_t i : te) test.push_back(g.edges()[i]);
  return {Graph(g.node_count(), std::move(train), g.directed(), g.ids()), std::move(test)};
}

EdgeSplit<BipartiteGraph> split(const BipartiteGraph& g, const SplitSpec& spec) {
  const auto [tr, te] = split_indices(g.edges(), spec);
  std::vector<Edge> train;
  for (std::size_t i : tr) train.push_back(g.edges()[i]);
  std::vector<Edge> test;
  for (std::size_t i : te) test.push_back(g.edges()[i]);
  return {BipartiteGraph(g.left_count(), g.right_count(), std::move(train), g.left_ids(), g.right_ids()),
          std::move(test)};
}

namespace {

template <class Draw, class IsEdge>
std::vector<NodePair> rejection_sample(std::size_t count, double candidates, std::uint64_t seed, Draw draw,
                                       IsEdge is_edge) {
  if (candidates < static_cast<double>(count))
    throw Error(ErrorKind::invalid_input, "not enough unconnected node pairs to sample from");
  std::mt19937_64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<NodePair> out;
  out.reserve(count);
  const std::size_t cap = 100 * std::max<std::size_t>(count, 1);
  for (std::size_t attempt = 0; attempt < cap && out.size() < count; ++attempt) {
    const NodePair p = draw(rng);
    if (is_edge(p)) continue;
    if (!seen.emplace(p.u, p.v).second) continue;
    out.push_back(p);
  }
  if (out.size() < count)
    throw Error(ErrorKind::invalid_input, "fill too high: could not sample enough unconnected pairs");
  return out;
}

}  // namespace

std::vector<NodePair> sample_zero_edges(const Graph& g, std::size_t count, std::uint64_t seed) {
  const auto n = static_cast<std::uint64_t>(g.node_count());
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  std::size_t non_loop_edges = 0;
  for (const Edge& e : g.edges()) non_loop_edges += e.u != e.v;
  return rejection_sample(
      count, pairs - static_cast<double>(non_loop_edges), seed,
      [n](std::mt19937_64& rng) {
        auto a = static_cast<NodeId>(rng() % n);
        auto b = static_cast<NodeId>(rng() % n);
        if (a > b) std::swap(a, b);
        return NodePair{a, b};
      },
      [&g](const NodePair& p) { return p.u == p.v || g.has_edge(p.u, p.v); });
}

std::vector<NodePair> sample_zero_edges(const BipartiteGraph& g, std::size_t count, std::uint64_t seed) {
  const auto nl = static_cast<std::uint64_t>(g.left_count());
  const auto nr = static_cast<std::uint64_t>(g.right_count());
  return rejection_sample(
      count, static_cast<double>(nl) * static_cast<double>(nr) - static_cast<double>(g.edge_count()), seed,
      [nl, nr](std::mt19937_64& rng) {
        const auto a = static_cast<NodeId>(rng() % nl);
        const auto b = static_cast<NodeId>(rng() % nr);
        return NodePair{a, b};
      },
      [&g](const NodePair& p) { return g.has_edge(p.u, p.v); });
}

const MethodResult* EvalReport::find(Method m) const {
  for (const auto& r : results)
    if (r.method == m) return &r;
  return nullptr;
}

namespace {

template <class G>
EvalReport run(const G& g, std::span<const Method> methods, const SplitSpec& spec, const KernelParams& params,
               const SolverConfig& cfg) {
  const EdgeSplit<G> s = split(g, spec);
  const std::vector<NodePair> zeros = sample_zero_edges(g, s.test.size(), derive_seed(spec.seed, 1));
  EvalReport report;
  report.seed = spec.seed;
  report.temporal = spec.temporal;
  report.train_size = s.training.edge_count();
  report.test_size = s.test.size();
  report.zero_size = zeros.size();

  std::uint64_t stream = 100;
  for (Method m : methods) {
    MethodResult r;
    r.method = m;
    const auto start = std::chrono::steady_clock::now();
    try {
      KernelParams p = params;
      p.seed = derive_seed(spec.seed, stream);
      const ScoreModel model = fit_kernel(s.training, m, p, cfg);
      r.alpha = model.alpha();
      r.rank = model.rank();
      r.coefficients = model.coefficients();
      std::vector<double> pos, neg;
      pos.reserve(s.test.size());
      neg.reserve(zeros.size());
      for (const Edge& e : s.test) pos.push_back(model.score(e.u, e.v));
      for (const NodePair& z : zeros) neg.push_back(model.score(z.u, z.v));
      r.auc = auc(pos, neg);
    } catch (const Error& e) {
      r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(r));
    ++stream;
  }
  return report;
}

}  // namespace

EvalReport run_experiment(const Graph& g, std::span<const Method> methods, const SplitSpec& spec,
                          const KernelParams& params, const SolverConfig& cfg) {
  return run(g, methods, spec, params, cfg);
}

EvalReport run_experiment(const BipartiteGraph& g, std::span<const Method> methods, const SplitSpec& spec,
                          const KernelParams& params, const SolverConfig& cfg) {
  return run(g, methods, spec, params, cfg);
}

}  // namespace bipnet
