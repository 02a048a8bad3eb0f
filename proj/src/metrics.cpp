#include "autocomplexity/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace autocomplexity {

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::jnum: return "jnum";
    case MetricKind::jnum_max: return "jnum-max";
    case MetricKind::j: return "j";
    case MetricKind::jmax: return "jmax";
  }
  return "?";
}

MetricKind metric_kind_from_string(const std::string& name) {
  for (MetricKind k : kAllMetrics) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown metric '" + name + "' (expected jnum, jnum-max, j, jmax)");
}

PairComplexities pair_complexities(const Word& x_in, const Word& y_in, Solver& solver,
                                   ComplexityBase base) {
  if (x_in.size() != y_in.size()) {
    throw std::invalid_argument("metric: words differ in length");
  }
  const Word x = slow_normalize(x_in);
  const Word y = slow_normalize(y_in);
  PairComplexities c;
  if (base == ComplexityBase::unique) {
    c.x = solver.unique(x);
    c.y = solver.unique(y);
    c.x_given_y = solver.conditional(x, y);
    c.y_given_x = solver.conditional(y, x);
    c.track = solver.of_track(x, y);
  } else {
    c.x = solver.value({ComplexityKind::det_partial, x, std::nullopt});
    c.y = solver.value({ComplexityKind::det_partial, y, std::nullopt});
    c.x_given_y = solver.value({ComplexityKind::det_partial_cond, x, y});
    c.y_given_x = solver.value({ComplexityKind::det_partial_cond, y, x});
    c.track = solver.value({ComplexityKind::det_partial, track(x, y).word(), std::nullopt});
  }
  return c;
}

bool unit_jaccard(const PairComplexities& c) {
  return c.x_given_y * c.y_given_x > 1 && c.track == c.x * c.y;
}

double metric_from(MetricKind kind, const PairComplexities& c) {
  const std::size_t product = c.x_given_y * c.y_given_x;
  const std::size_t larger = std::max(c.x_given_y, c.y_given_x);
  switch (kind) {
    case MetricKind::jnum:
      return product == 1 ? 0.0 : std::log2(static_cast<double>(product));
    case MetricKind::jnum_max:
      return larger == 1 ? 0.0 : std::log2(static_cast<double>(larger));
    case MetricKind::j: {
      if (product == 1) return 0.0;
      if (unit_jaccard(c)) return 1.0;
      const double num = std::log2(static_cast<double>(product));
      const double den = num + std::log2(static_cast<double>(c.x)) +
                         std::log2(static_cast<double>(c.y)) -
                         std::log2(static_cast<double>(c.track));
      return num / den;
    }
    case MetricKind::jmax: {
      if (larger == 1) return 0.0;
      const std::size_t scale = std::max(c.x, c.y);
      if (larger == scale) return 1.0;
      if (scale == 1) throw std::logic_error("jmax: conditional exceeds 1 for constant words");
      return std::log2(static_cast<double>(larger)) / std::log2(static_cast<double>(scale));
    }
  }
  return 0.0;
}

double metric_value(MetricKind kind, const Word& x, const Word& y, Solver& solver,
                    ComplexityBase base) {
  return metric_from(kind, pair_complexities(x, y, solver, base));
}

MetricReport check_metric_axioms(const DistanceMatrix& m, std::size_t max_listed) {
  MetricReport r;
  const std::size_t size = m.d.size();
  r.ground_set_size = size;
  auto add = [max_listed](std::vector<Violation>& list, Violation v) {
    if (list.size() < max_listed) list.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < size; ++i) {
    if (!m.zero[i][i]) add(r.identity_violations, {{i, i}, {m.d[i][i]}});
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j && m.zero[i][j]) add(r.identity_violations, {{i, j}, {m.d[i][j]}});
      if (i < j && m.d[i][j] != m.d[j][i]) {
        add(r.symmetry_violations, {{i, j}, {m.d[i][j], m.d[j][i]}});
      }
      if (m.d[i][j] < 0) add(r.identity_violations, {{i, j}, {m.d[i][j]}});
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k) {
        ++r.triangle_checks;
        if (m.d[i][k] > m.d[i][j] + m.d[j][k] + kTriangleTolerance) {
          add(r.triangle_violations, {{i, j, k}, {m.d[i][k], m.d[i][j], m.d[j][k]}});
        }
      }
    }
  }
  return r;
}

std::vector<Word> metric_ground_set(std::size_t n, std::size_t alphabet) {
  return slow_words(n, alphabet);
}

std::vector<PairComplexities> ground_set_complexities(const std::vector<Word>& ground,
                                                      Solver& solver, std::size_t jobs,
                                                      ComplexityBase base) {
  const std::size_t size = ground.size();
  std::vector<PairComplexities> out(size * size);
  parallel_for(size * size, jobs, [&](std::size_t idx) {
    out[idx] = pair_complexities(ground[idx / size], ground[idx % size], solver, base);
  });
  return out;
}

MetricReport verify_metric(std::size_t n, MetricKind kind, Solver& solver, std::size_t jobs,
                           std::size_t alphabet) {
  const auto ground = metric_ground_set(n, alphabet);
  const auto pairs = ground_set_complexities(ground, solver, jobs);
  const std::size_t size = ground.size();
  DistanceMatrix m;
  m.d.assign(size, std::vector<double>(size, 0.0));
  m.zero.assign(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      m.d[i][j] = metric_from(kind, pairs[i * size + j]);
      m.zero[i][j] = m.d[i][j] == 0.0;
    }
  }
  MetricReport r = check_metric_axioms(m);
  r.n = n;
  r.kind = kind;
  return r;
}

std::vector<std::pair<Word, Word>> classify_unit_distance(std::size_t n, Solver& solver,
                                                          bool fast_path, std::size_t alphabet,
                                                          std::size_t jobs) {
  const auto ground = slow_words(n, alphabet);
  std::vector<std::size_t> single(ground.size());
  parallel_for(ground.size(), jobs, [&](std::size_t i) { single[i] = solver.unique(ground[i]); });
  const std::size_t ceiling = n / 2 + 1;
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = i + 1; j < ground.size(); ++j) {
      if (!fast_path || single[i] * single[j] <= ceiling) candidates.emplace_back(i, j);
    }
  }
  std::vector<char> hit(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t c) {
    const auto [i, j] = candidates[c];
    hit[c] = unit_jaccard(pair_complexities(ground[i], ground[j], solver));
  });
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (hit[c]) out.emplace_back(ground[candidates[c].first], ground[candidates[c].second]);
  }
  return out;
}

std::vector<std::pair<Word, Word>> expected_unit_distance_pairs(std::size_t n) {
  std::vector<std::pair<Word, Word>> out;
  const auto ground = slow_words(n, 2);
  if (ground.empty()) return out;
  const Word zeros = ground.front();
  for (std::size_t i = 1; i < ground.size(); ++i) out.emplace_back(zeros, ground[i]);
  if (n >= 10) {
    const Word alternating = periodic_prefix(Word::parse("01", 2), n);
    for (const char* alpha : {"001", "010", "011"}) {
      Word other = periodic_prefix(Word::parse(alpha, 2), n);
      out.emplace_back(std::min(alternating, other), std::max(alternating, other));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t DistributionRow::mode() const {
  std::size_t best = 0;
  for (std::size_t q = 1; q < counts.size(); ++q) {
    if (best == 0 || counts[q] > counts[best]) best = q;
  }
  return best;
}

namespace {

DistributionRow tally(std::size_t n, const std::vector<std::size_t>& values) {
  DistributionRow row;
  row.n = n;
  for (std::size_t v : values) {
    if (row.counts.size() <= v) row.counts.resize(v + 1, 0);
    ++row.counts[v];
    ++row.total;
  }
  return row;
}

}  // namespace

DistributionRow distribution_row(std::size_t n, Solver& solver, std::size_t jobs) {
  const auto ground = slow_words(n, 2);
  const std::size_t size = ground.size();
  std::vector<std::size_t> values(size * size);
  parallel_for(values.size(), jobs, [&](std::size_t idx) {
    values[idx] = solver.conditional(ground[idx / size], ground[idx % size]);
  });
  return tally(n, values);
}

std::vector<DistributionRow> distribution_table(std::size_t n_max, Solver& solver,
                                                std::size_t jobs) {
  std::vector<DistributionRow> rows;
  for (std::size_t n = 0; n <= n_max; ++n) rows.push_back(distribution_row(n, solver, jobs));
  return rows;
}

DistributionRow sample_distribution(std::size_t n, std::size_t samples, std::uint64_t seed,
                                    Solver& solver, std::size_t jobs) {
  if (n > 64) throw std::invalid_argument("sample_distribution supports n <= 64");
  std::mt19937_64 gen(seed);
  auto draw = [&] {
    const std::uint64_t bits = gen();
    std::vector<Symbol> s(n, 0);
    for (std::size_t i = 1; i < n; ++i) s[i] = static_cast<Symbol>((bits >> i) & 1u);
    return Word(std::move(s), 2);
  };
  std::vector<std::pair<Word, Word>> pairs;
  pairs.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    Word x = draw();
    Word y = draw();
    pairs.emplace_back(std::move(x), std::move(y));
  }
  std::vector<std::size_t> values(samples);
  parallel_for(samples, jobs, [&](std::size_t i) {
    values[i] = solver.conditional(pairs[i].first, pairs[i].second);
  });
  return tally(n, values);
}

std::string format_table_text(const std::vector<DistributionRow>& rows) {
  std::size_t width_q = 0;
  for (const auto& r : rows) width_q = std::max(width_q, r.counts.size());
  std::ostringstream out;
  std::ostringstream header;
  header << std::left << std::setw(6) << "n\\q";
  for (std::size_t q = 1; q < width_q; ++q) header << std::setw(10) << q;
  std::string head = header.str();
  head.erase(head.find_last_not_of(' ') + 1);
  out << head << "\n";
  for (const auto& r : rows) {
    std::ostringstream line;
    line << std::left << std::setw(6) << r.n;
    const std::size_t mode = r.mode();
    std::size_t last = 0;
    for (std::size_t q = 1; q < r.counts.size(); ++q) {
      if (r.counts[q]) last = q;
    }
    for (std::size_t q = 1; q <= last; ++q) {
      std::string cell = std::to_string(r.counts[q]);
      if (q == mode) cell = "[" + cell + "]";
      line << std::setw(10) << cell;
    }
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
  }
  return out.str();
}

std::string format_table_csv(const std::vector<DistributionRow>& rows) {
  std::size_t width_q = 0;
  for (const auto& r : rows) width_q = std::max(width_q, r.counts.size());
  std::ostringstream out;
  out << "n";
  for (std::size_t q = 1; q < width_q; ++q) out << ",q" << q;
  out << ",total,mode\n";
  for (const auto& r : rows) {
    out << r.n;
    for (std::size_t q = 1; q < width_q; ++q) out << "," << (q < r.counts.size() ? r.counts[q] : 0);
    out << "," << r.total << "," << r.mode() << "\n";
  }
  return out.str();
}

std::string format_table_json(const std::vector<DistributionRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (std::size_t q = 1; q < r.counts.size(); ++q) {
      if (r.counts[q]) counts[std::to_string(q)] = r.counts[q];
    }
    row["counts"] = counts;
    row["total"] = r.total;
    row["mode"] = r.mode();
    out.push_back(row);
  }
  return out.dump(2) + "\n";
}

}  // namespace autocomplexity
