#include "seatcfn/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Dense>

#include "seatcfn/rng.hpp"

namespace seatcfn {

namespace {

int ceil_log2(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  return bits;
}

int encoding_bits(QuboEncoding encoding, int choices) {
  switch (encoding) {
    case QuboEncoding::kOneHot: return choices;
    case QuboEncoding::kDomainWall: return choices - 1;
    case QuboEncoding::kApproxBinary: return ceil_log2(choices);
  }
  return 0;
}

// Accumulates coefficients before emitting a sorted, duplicate-free QUBO.
struct QuboBuilder {
  explicit QuboBuilder(int bits) : bit_count(bits), linear(bits, 0.0) {}

  void add_offset(double v) { offset += v; }
  void add_linear(int b, double v) { linear[b] += v; }
  void add_quadratic(int a, int b, double v) {
    if (a == b) throw std::invalid_argument("quadratic term needs two distinct bits");
    if (a > b) std::swap(a, b);
    quad[(static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b)] += v;
  }

  QuboProblem build() const {
    QuboProblem q;
    q.bit_count = bit_count;
    q.linear = linear;
    q.constant_offset = offset;
    q.quadratic.reserve(quad.size());
    for (const auto& [key, v] : quad) {
      if (v == 0.0) continue;
      q.quadratic.emplace_back(static_cast<int>(key >> 32),
                               static_cast<int>(key & 0xffffffffULL), v);
    }
    std::sort(q.quadratic.begin(), q.quadratic.end());
    return q;
  }

  int bit_count;
  std::vector<double> linear;
  std::map<std::uint64_t, double> quad;
  double offset = 0.0;
};

EncodingMap make_map(const CfnProblem& p, QuboEncoding encoding, double lambda_enc) {
  EncodingMap map;
  map.encoding = encoding;
  map.lambda_enc = lambda_enc;
  int offset = 0;
  for (int i = 0; i < p.node_count(); ++i) {
    const int len = encoding_bits(encoding, p.choice_count(i));
    map.bit_offset.push_back(offset);
    map.bit_length.push_back(len);
    map.choice_counts.push_back(p.choice_count(i));
    offset += len;
  }
  return map;
}

// Affine expression a0 + sum(coeff_k * bit_k) with at most two bit terms;
// domain-wall choice indicators have this shape.
struct Affine {
  double constant = 0.0;
  int bits[2] = {-1, -1};
  double coeff[2] = {0.0, 0.0};
  int terms = 0;

  void add(int bit, double c) {
    bits[terms] = bit;
    coeff[terms] = c;
    ++terms;
  }
};

Affine wall_indicator(int choice, int choices, int bit_offset) {
  Affine e;
  // virtual w_0 = 1 and w_D = 0 close the chain at both ends
  if (choice == 0) {
    e.constant = 1.0;
    if (choices > 1) e.add(bit_offset, -1.0);
  } else if (choice == choices - 1) {
    e.add(bit_offset + choice - 1, 1.0);
  } else {
    e.add(bit_offset + choice - 1, 1.0);
    e.add(bit_offset + choice, -1.0);
  }
  return e;
}

void add_affine_product(QuboBuilder& builder, const Affine& x, const Affine& y, double weight) {
  if (weight == 0.0) return;
  builder.add_offset(weight * x.constant * y.constant);
  for (int k = 0; k < x.terms; ++k)
    builder.add_linear(x.bits[k], weight * x.coeff[k] * y.constant);
  for (int l = 0; l < y.terms; ++l)
    builder.add_linear(y.bits[l], weight * x.constant * y.coeff[l]);
  for (int k = 0; k < x.terms; ++k)
    for (int l = 0; l < y.terms; ++l)
      builder.add_quadratic(x.bits[k], y.bits[l], weight * x.coeff[k] * y.coeff[l]);
}

}  // namespace

const char* encoding_name(QuboEncoding encoding) {
  switch (encoding) {
    case QuboEncoding::kOneHot: return "one_hot";
    case QuboEncoding::kDomainWall: return "domain_wall";
    case QuboEncoding::kApproxBinary: return "approx_binary";
  }
  return "unknown";
}

int EncodingMap::bit_count() const {
  int total = 0;
  for (int len : bit_length) total += len;
  return total;
}

int qubit_count(const CfnProblem& p, QuboEncoding encoding) {
  int total = 0;
  for (int i = 0; i < p.node_count(); ++i) total += encoding_bits(encoding, p.choice_count(i));
  return total;
}

double default_lambda_enc(const CfnProblem& p) {
  const int n = p.node_count();
  std::vector<double> incident_sum(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!pair_interacts(p, i, j)) continue;
      double sum = 0.0;
      for (double v : effective_pair_block(p, i, j)) sum += std::abs(v);
      incident_sum[i] += sum;
      incident_sum[j] += sum;
    }
  }
  double worst = 0.0;
  for (double s : incident_sum) worst = std::max(worst, s);
  return 2.0 * worst + 1.0;
}

EncodedQubo encode_one_hot(const CfnProblem& p, double lambda_enc) {
  if (!(lambda_enc > 0.0)) throw std::invalid_argument("lambda_enc must be > 0");
  EncodedQubo out;
  out.map = make_map(p, QuboEncoding::kOneHot, lambda_enc);
  QuboBuilder builder(out.map.bit_count());

  builder.add_offset(p.constant_offset);
  const int n = p.node_count();
  for (int i = 0; i < n; ++i) {
    const int off = out.map.bit_offset[i];
    const int d = p.choice_count(i);
    for (int c = 0; c < d; ++c) builder.add_linear(off + c, p.one_node[i][c]);
    // lambda * (sum_c x_c - 1)^2, expanded with x^2 = x
    builder.add_offset(lambda_enc);
    for (int c = 0; c < d; ++c) {
      builder.add_linear(off + c, -lambda_enc);
      for (int c2 = c + 1; c2 < d; ++c2)
        builder.add_quadratic(off + c, off + c2, 2.0 * lambda_enc);
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!pair_interacts(p, i, j)) continue;
      const auto block = effective_pair_block(p, i, j);
      const int dj = p.choice_count(j);
      for (int a = 0; a < p.choice_count(i); ++a)
        for (int b = 0; b < dj; ++b)
          if (block[a * dj + b] != 0.0)
            builder.add_quadratic(out.map.bit_offset[i] + a, out.map.bit_offset[j] + b,
                                  block[a * dj + b]);
    }
  }

  out.qubo = builder.build();
  return out;
}

EncodedQubo encode_domain_wall(const CfnProblem& p, double lambda_enc) {
  if (!(lambda_enc > 0.0)) throw std::invalid_argument("lambda_enc must be > 0");
  EncodedQubo out;
  out.map = make_map(p, QuboEncoding::kDomainWall, lambda_enc);
  QuboBuilder builder(out.map.bit_count());

  builder.add_offset(p.constant_offset);
  const int n = p.node_count();
  const Affine unit{1.0, {-1, -1}, {0.0, 0.0}, 0};

  for (int i = 0; i < n; ++i) {
    const int off = out.map.bit_offset[i];
    const int d = p.choice_count(i);
    for (int c = 0; c < d; ++c)
      add_affine_product(builder, wall_indicator(c, d, off), unit, p.one_node[i][c]);
    // lambda * sum_k w_{k+1} (1 - w_k) penalizes each broken wall
    for (int k = 0; k + 1 < d - 1; ++k) {
      builder.add_linear(off + k + 1, lambda_enc);
      builder.add_quadratic(off + k, off + k + 1, -lambda_enc);
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!pair_interacts(p, i, j)) continue;
      const auto block = effective_pair_block(p, i, j);
      const int di = p.choice_count(i);
      const int dj = p.choice_count(j);
      for (int a = 0; a < di; ++a) {
        const Affine ia = wall_indicator(a, di, out.map.bit_offset[i]);
        for (int b = 0; b < dj; ++b) {
          const double w = block[a * dj + b];
          if (w == 0.0) continue;
          add_affine_product(builder, ia, wall_indicator(b, dj, out.map.bit_offset[j]), w);
        }
      }
    }
  }

  out.qubo = builder.build();
  return out;
}

namespace {

// One fitted table: either a node's one-node table or a pair's effective
// block, expressed over the owning bits' patterns.
struct FitBlock {
  std::vector<int> bit_ids;
  std::vector<double> targets;   // per pattern, low bits = first bit id
  std::vector<double> weights;   // per pattern, least-squares weights
  std::vector<double> theta;     // fitted coefficients
  double rmse = 0.0;
  bool dirty = true;
};

int param_count(int m) { return 1 + m + m * (m - 1) / 2; }

// Shared per-shape design matrix with its decomposition, so the common
// uniform-weight fits reuse one factorization.
struct ShapeSolver {
  Eigen::MatrixXd design;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
};

ShapeSolver make_shape_solver(int m) {
  const int patterns = 1 << m;
  ShapeSolver solver;
  solver.design.resize(patterns, param_count(m));
  for (int pat = 0; pat < patterns; ++pat) {
    int col = 0;
    solver.design(pat, col++) = 1.0;
    for (int k = 0; k < m; ++k) solver.design(pat, col++) = (pat >> k) & 1;
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l)
        solver.design(pat, col++) = ((pat >> k) & 1) * ((pat >> l) & 1);
  }
  solver.qr.compute(solver.design);
  return solver;
}

// Weighted least squares of block targets by a quadratic form in the bits.
void fit_block(FitBlock& block, const std::map<int, ShapeSolver>& solvers) {
  const int m = static_cast<int>(block.bit_ids.size());
  const ShapeSolver& shape = solvers.at(m);
  const int patterns = 1 << m;
  Eigen::VectorXd rhs(patterns);
  for (int pat = 0; pat < patterns; ++pat) rhs(pat) = block.targets[pat];

  const bool uniform = std::all_of(block.weights.begin(), block.weights.end(),
                                   [&](double w) { return w == block.weights[0]; });
  Eigen::VectorXd theta;
  if (uniform) {
    theta = shape.qr.solve(rhs);
  } else {
    Eigen::VectorXd sqrt_w(patterns);
    for (int pat = 0; pat < patterns; ++pat) sqrt_w(pat) = std::sqrt(block.weights[pat]);
    const Eigen::MatrixXd weighted = sqrt_w.asDiagonal() * shape.design;
    theta = weighted.colPivHouseholderQr().solve(sqrt_w.asDiagonal() * rhs);
  }
  block.theta.assign(theta.data(), theta.data() + theta.size());

  const double mse = (shape.design * theta - rhs).squaredNorm() / patterns;
  block.rmse = std::sqrt(mse);
  if (block.rmse < 1e-8) block.rmse = 0.0;
  block.dirty = false;
}

void emit_block(QuboBuilder& builder, const FitBlock& block) {
  const int m = static_cast<int>(block.bit_ids.size());
  int col = 0;
  builder.add_offset(block.theta[col++]);
  for (int k = 0; k < m; ++k) builder.add_linear(block.bit_ids[k], block.theta[col++]);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l)
      builder.add_quadratic(block.bit_ids[k], block.bit_ids[l], block.theta[col++]);
}

int block_pattern(const FitBlock& block, const std::vector<std::uint8_t>& bits) {
  int pat = 0;
  for (std::size_t k = 0; k < block.bit_ids.size(); ++k) pat |= bits[block.bit_ids[k]] << k;
  return pat;
}

constexpr std::uint64_t kAbRefineSeed = 0xab5eedULL;
constexpr int kAbRefineRounds = 12;

}  // namespace

// The plain per-block least-squares surrogate systematically underestimates
// states that stack several collisions: each pair's symmetric fit rebates
// part of the penalty, and the rebates add up across pairs. The refinement
// loop below finds low-energy patterns whose surrogate energy sits below
// their true score and refits with extra weight there, keeping the round
// with the widest separation between true-best and underestimated states.
EncodedQubo encode_approx_binary(const CfnProblem& p) {
  EncodedQubo out;
  out.map = make_map(p, QuboEncoding::kApproxBinary, 0.0);
  const int n = p.node_count();
  const int total_bits = out.map.bit_count();

  std::vector<FitBlock> blocks;
  double max_abs_target = 0.0;

  for (int i = 0; i < n; ++i) {
    const int m = out.map.bit_length[i];
    const int d = p.choice_count(i);
    const bool all_zero = std::all_of(p.one_node[i].begin(), p.one_node[i].end(),
                                      [](double v) { return v == 0.0; });
    if (all_zero && m > 0) continue;
    FitBlock block;
    for (int k = 0; k < m; ++k) block.bit_ids.push_back(out.map.bit_offset[i] + k);
    block.targets.resize(1 << m);
    for (int pat = 0; pat < (1 << m); ++pat) {
      block.targets[pat] = p.one_node[i][pat % d];
      max_abs_target = std::max(max_abs_target, std::abs(block.targets[pat]));
    }
    block.weights.assign(block.targets.size(), 1.0);
    blocks.push_back(std::move(block));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!pair_interacts(p, i, j)) continue;
      const auto effective = effective_pair_block(p, i, j);
      if (std::all_of(effective.begin(), effective.end(),
                      [](double v) { return v == 0.0; }))
        continue;
      const int mi = out.map.bit_length[i];
      const int mj = out.map.bit_length[j];
      const int di = p.choice_count(i);
      const int dj = p.choice_count(j);
      FitBlock block;
      for (int k = 0; k < mi; ++k) block.bit_ids.push_back(out.map.bit_offset[i] + k);
      for (int k = 0; k < mj; ++k) block.bit_ids.push_back(out.map.bit_offset[j] + k);
      block.targets.resize(1 << (mi + mj));
      for (int pat = 0; pat < (1 << (mi + mj)); ++pat) {
        const int pi = pat & ((1 << mi) - 1);
        const int pj = pat >> mi;
        block.targets[pat] = effective[(pi % di) * dj + (pj % dj)];
        max_abs_target = std::max(max_abs_target, std::abs(block.targets[pat]));
      }
      block.weights.assign(block.targets.size(), 1.0);
      blocks.push_back(std::move(block));
    }
  }

  std::map<int, ShapeSolver> solvers;
  for (const FitBlock& block : blocks) {
    const int m = static_cast<int>(block.bit_ids.size());
    if (!solvers.count(m)) solvers.emplace(m, make_shape_solver(m));
  }

  const auto assemble = [&](double* residual_out) {
    QuboBuilder builder(total_bits);
    builder.add_offset(p.constant_offset);
    double residual = 0.0;
    for (FitBlock& block : blocks) {
      if (block.dirty) fit_block(block, solvers);
      emit_block(builder, block);
      residual += block.rmse;
    }
    if (residual_out != nullptr) *residual_out = residual;
    return builder.build();
  };

  double residual = 0.0;
  QuboProblem qubo = assemble(&residual);
  // refinement refits every block per round; skip it when a round would be
  // more work than a full fresh fit of a mid-sized problem
  long long refit_work = 0;
  for (const FitBlock& block : blocks)
    refit_work += static_cast<long long>(block.targets.size());
  if (max_abs_target == 0.0 || total_bits == 0 || refit_work > 300000) {
    out.qubo = std::move(qubo);
    out.fit_residual = residual;
    return out;
  }

  QuboProblem best_qubo = qubo;
  double best_residual = residual;
  double best_quality = -std::numeric_limits<double>::infinity();

  const double window = 0.35 * max_abs_target;
  const double boost = 1.0 / max_abs_target;

  for (int round = 0; round < kAbRefineRounds; ++round) {
    // candidate low-energy patterns: exhaustive when small, sampled otherwise
    std::vector<std::vector<std::uint8_t>> candidates;
    if (total_bits <= 16) {
      candidates.reserve(1u << total_bits);
      for (int pat = 0; pat < (1 << total_bits); ++pat) {
        std::vector<std::uint8_t> bits(total_bits);
        for (int k = 0; k < total_bits; ++k) bits[k] = (pat >> k) & 1;
        candidates.push_back(std::move(bits));
      }
    } else {
      for (const BitSample& sample : AnnealingSampler(64).sample(
               qubo, 256, kAbRefineSeed + static_cast<std::uint64_t>(round)))
        candidates.push_back(sample.bits);
    }

    double ground = std::numeric_limits<double>::infinity();
    double best_true = std::numeric_limits<double>::infinity();
    std::vector<double> energies(candidates.size());
    std::vector<double> scores(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      energies[c] = qubo_energy(qubo, candidates[c]);
      scores[c] = evaluate(p, *decode_bits(out.map, candidates[c]));
      ground = std::min(ground, energies[c]);
      best_true = std::min(best_true, scores[c]);
    }

    // separation between true-best candidates and intruders, shrunk by any
    // spread among the true-best energies (cold sampling needs them level)
    double good_top = -std::numeric_limits<double>::infinity();
    double good_floor = std::numeric_limits<double>::infinity();
    double bad_floor = std::numeric_limits<double>::infinity();
    bool any_exploited = false;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (scores[c] <= best_true + 1e-9) {
        good_top = std::max(good_top, energies[c]);
        good_floor = std::min(good_floor, energies[c]);
      } else if (energies[c] <= ground + window) {
        bad_floor = std::min(bad_floor, energies[c]);
        if (scores[c] - energies[c] > 1e-6) any_exploited = true;
      }
    }
    const double separation = std::min(bad_floor - good_top, window);
    const double quality = separation - (good_top - good_floor);
    if (quality > best_quality) {
      best_quality = quality;
      best_qubo = qubo;
      best_residual = residual;
    }
    if (!any_exploited) break;

    // pull the surrogate toward the truth on underestimated low states and
    // on the true-best states, so intruders rise and the best stay level
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (energies[c] > ground + window) continue;
      const double err = scores[c] - energies[c];
      const bool is_best = scores[c] <= best_true + 1e-9;
      if (err <= 1e-6 && !(is_best && err < -1e-6)) continue;
      for (FitBlock& block : blocks) {
        block.weights[block_pattern(block, candidates[c])] += boost * std::abs(err);
        block.dirty = true;
      }
    }
    qubo = assemble(&residual);
  }

  out.qubo = std::move(best_qubo);
  out.fit_residual = best_residual;
  return out;
}

std::optional<Assignment> decode_bits(const EncodingMap& map,
                                      const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != map.bit_count())
    throw std::invalid_argument("bit vector length mismatch");
  Assignment a(map.node_count());
  for (int i = 0; i < map.node_count(); ++i) {
    const int off = map.bit_offset[i];
    const int len = map.bit_length[i];
    switch (map.encoding) {
      case QuboEncoding::kOneHot: {
        int hot = -1;
        int count = 0;
        for (int k = 0; k < len; ++k) {
          if (bits[off + k]) {
            hot = k;
            ++count;
          }
        }
        if (count != 1) return std::nullopt;
        a[i] = hot;
        break;
      }
      case QuboEncoding::kDomainWall: {
        int ones = 0;
        for (int k = 0; k < len; ++k) {
          if (k + 1 < len && bits[off + k] < bits[off + k + 1]) return std::nullopt;
          ones += bits[off + k];
        }
        a[i] = ones;
        break;
      }
      case QuboEncoding::kApproxBinary: {
        int value = 0;
        for (int k = 0; k < len; ++k) value |= bits[off + k] << k;
        a[i] = value % map.choice_counts[i];
        break;
      }
    }
  }
  return a;
}

std::vector<std::uint8_t> encode_assignment(const EncodingMap& map, const Assignment& a) {
  std::vector<std::uint8_t> bits(map.bit_count(), 0);
  for (int i = 0; i < map.node_count(); ++i) {
    const int off = map.bit_offset[i];
    const int choice = a[i];
    switch (map.encoding) {
      case QuboEncoding::kOneHot:
        bits[off + choice] = 1;
        break;
      case QuboEncoding::kDomainWall:
        for (int k = 0; k < choice; ++k) bits[off + k] = 1;
        break;
      case QuboEncoding::kApproxBinary:
        for (int k = 0; k < map.bit_length[i]; ++k) bits[off + k] = (choice >> k) & 1;
        break;
    }
  }
  return bits;
}

double qubo_energy(const QuboProblem& q, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != q.bit_count)
    throw std::invalid_argument("bit vector length mismatch");
  double total = q.constant_offset;
  for (int b = 0; b < q.bit_count; ++b)
    if (bits[b]) total += q.linear[b];
  for (const auto& [i, j, v] : q.quadratic)
    if (bits[i] && bits[j]) total += v;
  return total;
}

namespace {

std::vector<BitSample> aggregate(const QuboProblem& q,
                                 std::map<std::vector<std::uint8_t>, int>& counts) {
  std::vector<BitSample> out;
  out.reserve(counts.size());
  for (auto& [bits, count] : counts)
    out.push_back({bits, qubo_energy(q, bits), count});
  return out;
}

}  // namespace

std::vector<BitSample> AnnealingSampler::sample(const QuboProblem& q, int shots,
                                                std::uint64_t seed) const {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");

  std::vector<std::vector<std::pair<int, double>>> adjacent(q.bit_count);
  for (const auto& [i, j, v] : q.quadratic) {
    adjacent[i].emplace_back(j, v);
    adjacent[j].emplace_back(i, v);
  }

  // Hot enough that the worst single flip is often accepted; cold enough at
  // the end that the walk freezes.
  double max_flip = 0.0;
  for (int b = 0; b < q.bit_count; ++b) {
    double reach = std::abs(q.linear[b]);
    for (const auto& [o, v] : adjacent[b]) reach += std::abs(v);
    max_flip = std::max(max_flip, reach);
  }
  if (max_flip == 0.0) max_flip = 1.0;
  const double t_hot = max_flip;
  const double t_cold = 1e-3 * max_flip;

  std::map<std::vector<std::uint8_t>, int> counts;
  std::vector<std::uint8_t> bits(q.bit_count);
  for (int shot = 0; shot < shots; ++shot) {
    auto rng = make_engine(seed, static_cast<std::uint64_t>(shot));
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    for (int sweep = 0; sweep < sweeps_; ++sweep) {
      const double frac = sweeps_ <= 1 ? 1.0 : static_cast<double>(sweep) / (sweeps_ - 1);
      const double t = t_hot * std::pow(t_cold / t_hot, frac);
      for (int b = 0; b < q.bit_count; ++b) {
        double field = q.linear[b];
        for (const auto& [o, v] : adjacent[b])
          if (bits[o]) field += v;
        const double delta = bits[b] ? -field : field;
        if (delta <= 0.0 || uniform_unit(rng) < std::exp(-delta / t))
          bits[b] ^= 1;
      }
    }
    ++counts[bits];
  }
  return aggregate(q, counts);
}

std::vector<BitSample> RandomSampler::sample(const QuboProblem& q, int shots,
                                             std::uint64_t seed) const {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::map<std::vector<std::uint8_t>, int> counts;
  std::vector<std::uint8_t> bits(q.bit_count);
  for (int shot = 0; shot < shots; ++shot) {
    auto rng = make_engine(seed, static_cast<std::uint64_t>(shot));
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    ++counts[bits];
  }
  return aggregate(q, counts);
}

std::vector<BitSample> sample_qubo(const QuboProblem& q, int shots, int sweeps,
                                   std::uint64_t seed) {
  return AnnealingSampler(sweeps).sample(q, shots, seed);
}

QuboSolveResult solve_via_qubo(const CfnProblem& p, QuboEncoding encoding,
                               const QuboSolveOptions& options) {
  EncodedQubo encoded;
  switch (encoding) {
    case QuboEncoding::kOneHot:
      encoded = encode_one_hot(
          p, options.lambda_enc > 0.0 ? options.lambda_enc : default_lambda_enc(p));
      break;
    case QuboEncoding::kDomainWall:
      encoded = encode_domain_wall(
          p, options.lambda_enc > 0.0 ? options.lambda_enc : default_lambda_enc(p));
      break;
    case QuboEncoding::kApproxBinary:
      encoded = encode_approx_binary(p);
      break;
  }

  const AnnealingSampler fallback(options.sweeps);
  const QuboSampler& sampler = options.sampler ? *options.sampler : fallback;
  const auto samples = sampler.sample(encoded.qubo, options.shots, options.seed);

  QuboSolveResult result;
  result.lambda_enc = encoded.map.lambda_enc;
  result.fit_residual = encoded.fit_residual;
  result.distinct_bitstrings = static_cast<long long>(samples.size());

  const std::string tag = std::string("qubo-") + encoding_name(encoding);
  std::map<Assignment, SolutionRecord> decoded;
  for (const BitSample& sample : samples) {
    const auto assignment = decode_bits(encoded.map, sample.bits);
    if (!assignment) {
      result.invalid_shots += sample.multiplicity;
      continue;
    }
    result.valid_shots += sample.multiplicity;
    if (!decoded.count(*assignment))
      decoded.emplace(*assignment,
                      SolutionRecord{*assignment, evaluate(p, *assignment),
                                     count_overlaps(p, *assignment), tag, options.seed,
                                     options.shots});
  }

  std::vector<SolutionRecord> ranked;
  ranked.reserve(decoded.size());
  for (auto& [a, rec] : decoded) ranked.push_back(rec);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const SolutionRecord& x, const SolutionRecord& y) {
                     return x.score < y.score;
                   });
  if (static_cast<int>(ranked.size()) > options.keep_top) ranked.resize(options.keep_top);
  if (!ranked.empty()) result.best = ranked.front();
  result.top_valid = std::move(ranked);
  return result;
}

}  // namespace seatcfn
