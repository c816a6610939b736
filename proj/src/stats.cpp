#include "gibbs/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

#include "gibbs/errors.hpp"
#include "gibbs/parallel.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

namespace {

bool counts_as_pair(const MarkedPoint& a, const MarkedPoint& b) {
  return a.mark == 0 || b.mark == 0 || a.mark != b.mark;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, ptr);
}

double parse_double(const std::string& field) {
  if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw std::invalid_argument("bad number '" + field + "'");
  return v;
}

}  // namespace

std::size_t close_pair_count(const PointConfig& config, double threshold,
                             const BoxDomain& domain) {
  const double t2 = threshold * threshold;
  std::size_t count = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      if (counts_as_pair(config[i], config[j]) &&
          squared_distance(config[i].x, config[j].x, domain) < t2) {
        ++count;
      }
    }
  }
  return count;
}

std::size_t close_pair_count_cell_list(const PointConfig& config, double threshold,
                                       const BoxDomain& domain) {
  if (config.size() < 2 || !(threshold > 0.0)) return 0;
  const int dim = domain.dim;
  const int per_axis = std::max(1, static_cast<int>(std::floor(domain.side / threshold)));
  const double edge = domain.side / per_axis;
  const double t2 = threshold * threshold;

  auto key_of = [&](const std::array<int, kMaxDim>& c) {
    std::int64_t key = 0;
    for (int k = dim - 1; k >= 0; --k) key = key * per_axis + c[k];
    return key;
  };
  auto coords_of = [&](const Coords& x) {
    std::array<int, kMaxDim> c{};
    for (int k = 0; k < dim; ++k) {
      c[k] = std::clamp(static_cast<int>(std::floor((x[k] - domain.lower) / edge)), 0,
                        per_axis - 1);
    }
    return c;
  };

  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < config.size(); ++i) buckets[key_of(coords_of(config[i].x))].push_back(i);

  int offsets = 1;
  for (int k = 0; k < dim; ++k) offsets *= 3;
  std::size_t count = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto base = coords_of(config[i].x);
    std::vector<std::int64_t> seen;
    for (int o = 0; o < offsets; ++o) {
      auto nb = base;
      int code = o;
      bool valid = true;
      for (int k = 0; k < dim; ++k) {
        nb[k] += code % 3 - 1;
        code /= 3;
        if (nb[k] < 0 || nb[k] >= per_axis) {
          if (!domain.periodic) {
            valid = false;
            break;
          }
          nb[k] = (nb[k] + per_axis) % per_axis;
        }
      }
      if (!valid) continue;
      const auto key = key_of(nb);
      // Small periodic grids can wrap two offsets onto the same bucket.
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      const auto it = buckets.find(key);
      if (it == buckets.end()) continue;
      for (std::size_t j : it->second) {
        if (j > i && counts_as_pair(config[i], config[j]) &&
            squared_distance(config[i].x, config[j].x, domain) < t2) {
          ++count;
        }
      }
    }
  }
  return count;
}

void CountHistogram::add(std::uint64_t value, std::uint64_t times) {
  bins_[value] += times;
  total_ += times;
}

std::uint64_t CountHistogram::count(std::uint64_t value) const {
  const auto it = bins_.find(value);
  return it == bins_.end() ? 0 : it->second;
}

double CountHistogram::mean() const {
  if (total_ == 0) return 0.0;
  double sum = 0.0;
  for (const auto& [v, c] : bins_) sum += static_cast<double>(v) * static_cast<double>(c);
  return sum / static_cast<double>(total_);
}

ChiSquareResult two_sample_chisq(const CountHistogram& a, const CountHistogram& b) {
  if (a.total() < kMinChiSquareSample || b.total() < kMinChiSquareSample) {
    throw std::invalid_argument("two-sample chi-square needs at least 1000 observations per sample");
  }
  std::vector<std::uint64_t> keys;
  for (const auto& [k, c] : a.bins()) keys.push_back(k);
  for (const auto& [k, c] : b.bins()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const double na = static_cast<double>(a.total());
  const double nb = static_cast<double>(b.total());
  const double n = na + nb;

  struct Group {
    double a = 0.0;
    double b = 0.0;
  };
  std::vector<Group> groups;
  Group open;
  auto large_enough = [&](const Group& g) {
    const double pooled = g.a + g.b;
    return na * pooled / n >= 5.0 && nb * pooled / n >= 5.0;
  };
  for (auto k : keys) {
    open.a += static_cast<double>(a.count(k));
    open.b += static_cast<double>(b.count(k));
    if (large_enough(open)) {
      groups.push_back(open);
      open = {};
    }
  }
  if (open.a + open.b > 0.0) {
    if (groups.empty()) {
      groups.push_back(open);
    } else {
      groups.back().a += open.a;
      groups.back().b += open.b;
    }
  }

  ChiSquareResult result;
  if (groups.size() < 2) return result;
  for (const auto& g : groups) {
    const double pooled = g.a + g.b;
    const double ea = na * pooled / n;
    const double eb = nb * pooled / n;
    result.statistic += (g.a - ea) * (g.a - ea) / ea + (g.b - eb) * (g.b - eb) / eb;
  }
  result.degrees_of_freedom = static_cast<int>(groups.size()) - 1;
  result.conclusive = true;
  const boost::math::chi_squared dist(result.degrees_of_freedom);
  result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  return result;
}

SweepResult mean_iterations_sweep(const ModelTemplate& model, std::span<const int> cells_per_axis,
                                  std::uint64_t replications, std::uint64_t seed,
                                  unsigned workers, std::uint32_t iteration_cap) {
  if (replications == 0) throw std::invalid_argument("replications must be positive");
  SweepResult result;
  for (int k : cells_per_axis) {
    if (k < 1) throw std::invalid_argument("K must be a positive integer");
    const ExperimentSampler sampler(model, k);
    const std::uint64_t k_seed = replicate_seed(seed, static_cast<std::uint64_t>(k));
    std::vector<double> iterations(replications, 0.0);
    PrsOptions options;
    options.iteration_cap = iteration_cap;
    auto fail = [&](const std::exception& e) {
      std::ostringstream msg;
      msg << "sampling cap exceeded at K=" << k << ", kappa0=" << model.total_kappa0() << ": "
          << e.what();
      throw SweepError(msg.str(), result);
    };
    try {
      parallel_for(replications, workers, [&](std::size_t rep) {
        const auto run = sampler.run(replicate_seed(k_seed, rep), options);
        iterations[rep] = static_cast<double>(run.trace.total_iterations());
      });
    } catch (const IterationCapExceeded& e) {
      fail(e);
    } catch (const AttemptCapExceeded& e) {
      fail(e);
    }

    double mean = 0.0;
    for (double v : iterations) mean += v;
    mean /= static_cast<double>(replications);
    double ss = 0.0;
    for (double v : iterations) ss += (v - mean) * (v - mean);
    const double sd = replications > 1 ? std::sqrt(ss / static_cast<double>(replications - 1)) : 0.0;
    result.rows.push_back({k, model.total_kappa0(), to_string(model.kind), model.reported_gamma(),
                           mean, sd / std::sqrt(static_cast<double>(replications)), replications});
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result, bool header) {
  if (header) out << kSweepCsvHeader << '\n';
  for (const auto& row : result.rows) {
    out << row.cells_per_axis << ',' << format_double(row.kappa0) << ',' << row.model << ','
        << format_double(row.gamma) << ',' << format_double(row.mean_iterations) << ','
        << format_double(row.standard_error) << ',' << row.replications << '\n';
  }
}

SweepResult read_sweep_csv(std::istream& in) {
  SweepResult result;
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw std::invalid_argument("sweep CSV must start with header '" + std::string(kSweepCsvHeader) + "'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 7) throw std::invalid_argument("sweep CSV row needs 7 fields: " + line);
    SweepRow row;
    row.cells_per_axis = std::stoi(fields[0]);
    row.kappa0 = parse_double(fields[1]);
    row.model = fields[2];
    row.gamma = parse_double(fields[3]);
    row.mean_iterations = parse_double(fields[4]);
    row.standard_error = parse_double(fields[5]);
    row.replications = std::stoull(fields[6]);
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace gibbs
