// Copyright 2026 The bosynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosynth/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace bosynth {

using nlohmann::json;

namespace {

constexpr std::uint64_t kCompileCap = 2'000'000;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or(const json& j, double fallback) {
  return j.is_null() ? fallback : j.get<double>();
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

std::string stem_of(const ExperimentConfig& c) {
  std::string s = c.name;
  if (!c.label.empty()) s += "_" + c.label;
  for (auto& ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_')) ch = 'p';
  return s;
}

Vector random_probe(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(g(rng), g(rng));
  return v / v.norm();
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) f(i);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<double> GridSpec::resolve(std::optional<double> natural_time) const {
  if (!values.empty()) {
    std::vector<double> out;
    for (double v : values) {
      if (std::isnan(v)) {
        if (!natural_time) throw UsageError("grid: application has no natural time");
        out.push_back(*natural_time);
      } else {
        out.push_back(v);
      }
    }
    return out;
  }
  if (points < 1) throw UsageError("grid: empty");
  if (!(min < max)) throw UsageError("grid: min must be below max");
  return log ? log_grid(min, max, points) : linear_grid(min, max, points);
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw UsageError("config: expected an object");
    c.raw = j;
    read(j, "name", c.name);
    read(j, "label", c.label);
    if (!j.contains("application")) throw UsageError("config: missing application");
    c.application = j.at("application").get<std::string>();
    if (j.contains("params")) {
      const auto& p = j.at("params");
      read(p, "cutoff", c.cutoff);
      read(p, "omega", c.omega);
      read(p, "kappa", c.kappa);
      read(p, "u", c.u);
      read(p, "j", c.j);
      read(p, "k", c.k);
      read(p, "delta", c.delta);
      read(p, "axis", c.axis);
      read(p, "probe", c.probe);
    }
    if (j.contains("orders")) {
      const auto& o = j.at("orders");
      read(o, "bch", c.orders.bch);
      read(o, "trotter", c.orders.trotter);
      read(o, "symmetrized", c.orders.symmetrized);
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      read(g, "min", c.grid.min);
      read(g, "max", c.grid.max);
      read(g, "points", c.grid.points);
      read(g, "log", c.grid.log);
      if (g.contains("values")) {
        for (const auto& v : g.at("values")) {
          if (v.is_string()) {
            if (v.get<std::string>() != "natural")
              throw UsageError("grid: unknown value " + v.get<std::string>());
            c.grid.values.push_back(std::numeric_limits<double>::quiet_NaN());
          } else {
            c.grid.values.push_back(v.get<double>());
          }
        }
        if (c.grid.values.empty()) throw UsageError("grid: empty");
      }
    }
    if (j.contains("slices")) {
      const auto& s = j.at("slices");
      c.slices = s.is_string() ? (s.get<std::string>() == "auto"
                                      ? 0
                                      : throw UsageError("slices: integer or \"auto\""))
                               : s.get<std::size_t>();
    }
    read(j, "epsilon", c.epsilon);
    read(j, "seed", c.seed);
    if (j.contains("dynamics")) {
      DynamicsSpec d;
      read(j.at("dynamics"), "steps", d.steps);
      read(j.at("dynamics"), "t_final", d.t_final);
      c.dynamics = d;
    }
    read(j, "heatmap", c.heatmap);
    if (j.contains("sweep"))
      for (const auto& e : j.at("sweep")) c.sweep.push_back(e);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
  return from_json(j);
}

json ExperimentConfig::to_json() const {
  json g;
  if (grid.values.empty()) {
    g = {{"min", grid.min}, {"max", grid.max}, {"points", grid.points}, {"log", grid.log}};
  } else {
    g["values"] = json::array();
    for (double v : grid.values) g["values"].push_back(std::isnan(v) ? json("natural") : json(v));
  }
  json out = {{"name", name},
            {"application", application},
            {"params",
             {{"cutoff", cutoff},
              {"omega", omega},
              {"kappa", kappa},
              {"u", u},
              {"j", this->j},
              {"k", k},
              {"delta", delta},
              {"axis", axis},
              {"probe", probe}}},
            {"orders",
             {{"bch", orders.bch},
              {"trotter", orders.trotter},
              {"symmetrized", orders.symmetrized}}},
            {"grid", g},
            {"slices", slices == 0 ? json("auto") : json(slices)},
            {"epsilon", epsilon},
            {"seed", seed},
            {"heatmap", heatmap}};
  if (!label.empty()) out["label"] = label;
  if (dynamics) out["dynamics"] = {{"steps", dynamics->steps}, {"t_final", dynamics->t_final}};
  if (!sweep.empty()) out["sweep"] = sweep;
  return out;
}

void ExperimentConfig::validate() const {
  find_application(application);
  if (cutoff < 1) throw UsageError("cutoff must be at least 1");
  if (orders.bch < 1) throw UsageError("orders.bch must be at least 1");
  if (orders.trotter < 2 || orders.trotter % 2) throw UsageError("orders.trotter must be even");
  if (grid.values.empty()) {
    if (grid.points < 1) throw UsageError("grid: empty");
    if (!(grid.min < grid.max)) throw UsageError("grid: min must be below max");
    if (grid.log && !(grid.min > 0)) throw UsageError("grid: log grid needs min > 0");
  }
  if (!(epsilon > 0)) throw UsageError("epsilon must be positive");
  if (dynamics && (dynamics->steps == 0 || !(dynamics->t_final > 0)))
    throw UsageError("dynamics: steps and t_final must be positive");
  if (probe != "default" && probe != "random") throw UsageError("probe: default or random");
}

json SynthesisReport::to_json() const {
  json j;
  j["config"] = config;
  j["name"] = name;
  j["t"] = t;
  j["op_norm_error"] = op_norm_error;
  j["autocorr_error"] = autocorr_error;
  j["gate_count"] = gate_count;
  j["slices"] = slices;
  j["gate_counts_per_slice"] = {{"total", per_slice.total}, {"by_kind", per_slice.by_kind}};
  if (fit) {
    j["fit"] = {{"exponent", fit_reliable ? json(fit->exponent) : json(nullptr)},
                {"fitted_exponent", fit->exponent},
                {"prefactor", finite_or_null(fit->prefactor)},
                {"residual", fit->residual},
                {"used", fit->used},
                {"reliable", fit_reliable}};
  } else {
    j["fit"] = nullptr;
  }
  j["claimed_order"] = finite_or_null(claimed_order);
  j["cost_bound"] = finite_or_null(cost_bound);
  j["within_bound"] = within_bound;
  j["lower_bound_depth"] = lower_bound_depth;
  j["sequence_length"] = sequence_length ? json(*sequence_length) : json(nullptr);
  j["ledger_consistent"] = ledger_consistent;
  j["wall_clock_seconds"] = wall_clock;
  j["warnings"] = warnings;
  return j;
}

SynthesisReport SynthesisReport::from_json(const json& j) {
  SynthesisReport r;
  try {
    r.config = j.at("config");
    r.name = j.at("name").get<std::string>();
    r.t = j.at("t").get<std::vector<double>>();
    r.op_norm_error = j.at("op_norm_error").get<std::vector<double>>();
    r.autocorr_error = j.at("autocorr_error").get<std::vector<double>>();
    r.gate_count = j.at("gate_count").get<std::vector<std::uint64_t>>();
    r.slices = j.at("slices").get<std::vector<std::size_t>>();
    r.per_slice.total = j.at("gate_counts_per_slice").at("total").get<std::uint64_t>();
    r.per_slice.by_kind = j.at("gate_counts_per_slice")
                              .at("by_kind")
                              .get<std::map<std::string, std::uint64_t>>();
    if (!j.at("fit").is_null()) {
      const auto& f = j.at("fit");
      PowerLawFit p;
      p.exponent = f.at("fitted_exponent").get<double>();
      p.prefactor = number_or(f.at("prefactor"), std::numeric_limits<double>::infinity());
      p.residual = f.at("residual").get<double>();
      p.used = f.at("used").get<std::size_t>();
      r.fit = p;
      r.fit_reliable = f.at("reliable").get<bool>();
    }
    r.claimed_order = number_or(j.at("claimed_order"), std::numeric_limits<double>::infinity());
    r.cost_bound = number_or(j.at("cost_bound"), std::numeric_limits<double>::infinity());
    r.within_bound = j.at("within_bound").get<bool>();
    r.lower_bound_depth = j.at("lower_bound_depth").get<std::uint64_t>();
    if (!j.at("sequence_length").is_null())
      r.sequence_length = j.at("sequence_length").get<std::uint64_t>();
    r.ledger_consistent = j.at("ledger_consistent").get<bool>();
    r.wall_clock = j.at("wall_clock_seconds").get<double>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("report: ") + e.what());
  }
  return r;
}

bool SynthesisReport::operator==(const SynthesisReport& o) const {
  auto same_fit = [](const std::optional<PowerLawFit>& a, const std::optional<PowerLawFit>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->exponent == b->exponent && a->residual == b->residual && a->used == b->used &&
           (a->prefactor == b->prefactor ||
            (!std::isfinite(a->prefactor) && !std::isfinite(b->prefactor)));
  };
  auto same_num = [](double a, double b) {
    return a == b || (!std::isfinite(a) && !std::isfinite(b));
  };
  return config == o.config && name == o.name && t == o.t && op_norm_error == o.op_norm_error &&
         autocorr_error == o.autocorr_error && gate_count == o.gate_count &&
         slices == o.slices && per_slice == o.per_slice && same_fit(fit, o.fit) &&
         fit_reliable == o.fit_reliable && same_num(claimed_order, o.claimed_order) &&
         same_num(cost_bound, o.cost_bound) && within_bound == o.within_bound &&
         lower_bound_depth == o.lower_bound_depth && sequence_length == o.sequence_length &&
         ledger_consistent == o.ledger_consistent && wall_clock == o.wall_clock &&
         warnings == o.warnings;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("refusing to serialize a non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
}

void emit_csv(const SynthesisReport& r, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "t,op_norm_error,autocorr_error,gate_count,slices\n";
  for (std::size_t i = 0; i < r.t.size(); ++i)
    os << format_double(r.t[i]) << ',' << format_double(r.op_norm_error[i]) << ','
       << format_double(r.autocorr_error[i]) << ',' << r.gate_count[i] << ',' << r.slices[i]
       << '\n';
  write_atomic(path, os.str());
}

void emit_json(const SynthesisReport& r, const std::filesystem::path& path) {
  write_atomic(path, r.to_json().dump(2) + "\n");
}

void emit_heatmap_csv(const HeatmapData& h, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "row,col,exact_abs,synth_abs\n";
  for (Eigen::Index i = 0; i < h.exact.rows(); ++i)
    for (Eigen::Index j = 0; j < h.exact.cols(); ++j)
      os << i << ',' << j << ',' << format_double(std::abs(h.exact(i, j))) << ','
         << format_double(std::abs(h.synthesized(i, j))) << '\n';
  write_atomic(path, os.str());
}

void emit_dynamics_csv(const DynamicsTrace& exact, const DynamicsTrace& synth,
                       const std::vector<std::string>& population_labels,
                       const std::filesystem::path& path) {
  std::ostringstream os;
  os << "t,autocorr_exact,autocorr_synth,autocorr_error";
  const bool leak = !synth.leakage.empty();
  if (leak) os << ",leakage_exact,leakage_synth";
  for (const auto& l : population_labels) os << ",exact_" << l << ",synth_" << l;
  os << '\n';
  for (std::size_t i = 0; i < synth.times.size(); ++i) {
    os << format_double(synth.times[i]) << ',' << format_double(exact.autocorrelation[i]) << ','
       << format_double(synth.autocorrelation[i]) << ','
       << format_double(std::abs(synth.autocorrelation[i] - exact.autocorrelation[i]));
    if (leak) os << ',' << format_double(exact.leakage[i]) << ',' << format_double(synth.leakage[i]);
    for (std::size_t k = 0; k < population_labels.size(); ++k)
      os << ',' << format_double(exact.populations[k][i]) << ','
         << format_double(synth.populations[k][i]);
    os << '\n';
  }
  write_atomic(path, os.str());
}

RunArtifacts run(const ExperimentConfig& cfg, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  const auto& app = find_application(cfg.application);
  Case cs;
  try {
    cs = app.build(cfg);
  } catch (const ResourceError&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(cfg.application + ": " + e.what());
  }
  const auto& syn = cs.synthesis;
  const auto& layout = syn.generator.layout();
  if (layout.dim() > opt.dim_cap)
    throw ResourceError("dimension " + std::to_string(layout.dim()) + " exceeds cap " +
                        std::to_string(opt.dim_cap));
  const std::uint64_t seed = opt.seed.value_or(cfg.seed);
  const Vector psi0 = cfg.probe == "random" ? random_probe(layout.dim(), seed) : cs.psi0;
  const auto exact = syn.exact_fn();
  const auto ts = cfg.grid.resolve(cs.natural_time);
  if (ts.empty()) throw UsageError("grid: empty");

  RunArtifacts art;
  auto& rep = art.report;
  rep.config = cfg.to_json();
  rep.config["seed"] = seed;
  rep.name = stem_of(cfg);
  rep.t = ts;
  rep.op_norm_error.assign(ts.size(), 0.0);
  rep.autocorr_error.assign(ts.size(), 0.0);
  rep.gate_count.assign(ts.size(), 0);
  rep.slices.assign(ts.size(), 1);
  rep.per_slice = syn.unitary.cost();
  rep.claimed_order = syn.order;
  rep.cost_bound = syn.cost_bound;
  rep.lower_bound_depth = syn.lower_bound_depth;
  rep.warnings = syn.warnings;

  const double c_norm = cfg.slices == 0 ? spectral_norm(syn.generator) : 0.0;
  const double p_eff = std::isfinite(syn.order) ? std::max(syn.order, 1.25) : 2.0;
  std::vector<Matrix> synth_at(ts.size()), exact_at(ts.size());
  parallel_for(ts.size(), opt.threads, [&](std::size_t i) {
    const double t = ts[i];
    const Matrix e = exact(t);
    std::size_t r = cfg.slices;
    ParamUnitary sliced;
    if (r == 0) {
      auto res = timeslice(syn.unitary, exact, t, cfg.epsilon, p_eff, c_norm);
      r = res.r;
      sliced = res.sliced;
    } else {
      sliced = r == 1 ? syn.unitary : repeat(syn.unitary, r);
    }
    const Matrix u = sliced.matrix(t);
    rep.op_norm_error[i] = distance(u, e);
    rep.autocorr_error[i] =
        std::abs(psi0.dot(u * psi0).real() - psi0.dot(e * psi0).real());
    rep.gate_count[i] = saturating_mul(rep.per_slice.total, r);
    rep.slices[i] = r;
    synth_at[i] = u;
    exact_at[i] = e;
  });

  if (ts.size() >= 4) {
    try {
      rep.fit = fit_power_law_above(ts, rep.op_norm_error);
      rep.fit_reliable = rep.fit->residual < tolerances().fit_residual_cap;
    } catch (const std::invalid_argument&) {
      rep.fit.reset();
    }
  }
  rep.within_bound = !std::isfinite(syn.cost_bound) ||
                     static_cast<double>(rep.per_slice.total) <= syn.cost_bound;
  if (rep.per_slice.total <= kCompileCap) {
    rep.sequence_length = syn.unitary.compile(ts.front()).size();
    rep.ledger_consistent = *rep.sequence_length == rep.per_slice.total;
  }

  if (cfg.heatmap) {
    std::size_t at = ts.size() - 1;
    if (cs.natural_time)
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] == *cs.natural_time) at = i;
    art.heatmap = HeatmapData{ts[at], exact_at[at], synth_at[at]};
  }

  if (cfg.dynamics) {
    const double dt = cfg.dynamics->t_final / static_cast<double>(cfg.dynamics->steps);
    const std::size_t r = std::max<std::size_t>(cfg.slices, 1);
    const Matrix step = (r == 1 ? syn.unitary : repeat(syn.unitary, r)).matrix(dt);
    std::vector<Matrix> pops;
    for (const auto& [label, m] : cs.populations) {
      art.population_labels.push_back(label);
      pops.push_back(m);
    }
    art.synth_dynamics =
        run_dynamics(step, dt, cfg.dynamics->steps, psi0, cs.leakage_projector, pops);
    art.exact_dynamics =
        run_dynamics(exact(dt), dt, cfg.dynamics->steps, psi0, cs.leakage_projector, pops);
  }

  rep.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::filesystem::create_directories(opt.out_dir);
  const auto base = opt.out_dir / rep.name;
  auto with_suffix = [&](const std::string& s) {
    auto p = base;
    p += s;
    return p;
  };
  emit_csv(rep, with_suffix(".csv"));
  emit_json(rep, with_suffix(".json"));
  art.written = {with_suffix(".csv"), with_suffix(".json")};
  if (art.heatmap) {
    emit_heatmap_csv(*art.heatmap, with_suffix("_heatmap.csv"));
    art.written.push_back(with_suffix("_heatmap.csv"));
  }
  if (art.synth_dynamics) {
    emit_dynamics_csv(*art.exact_dynamics, *art.synth_dynamics, art.population_labels,
                      with_suffix("_dynamics.csv"));
    art.written.push_back(with_suffix("_dynamics.csv"));
  }
  return art;
}

std::vector<RunArtifacts> sweep(const ExperimentConfig& cfg, const RunOptions& opt) {
  if (cfg.sweep.empty()) throw UsageError("sweep: config has no sweep entries");
  std::vector<RunArtifacts> out;
  std::ostringstream os;
  os << "label,application,bch_order,symmetrized,trotter_order,slices,gate_count,t,"
        "op_norm_error,autocorr_error,exponent,residual\n";
  for (const auto& entry : cfg.sweep) {
    if (!entry.is_object() || !entry.contains("label"))
      throw UsageError("sweep: every entry needs a label");
    json merged = cfg.raw;
    merged.erase("sweep");
    merged.merge_patch(entry);
    const auto sub = ExperimentConfig::from_json(merged);
    auto art = run(sub, opt);
    const auto& r = art.report;
    const std::size_t last = r.t.size() - 1;
    os << sub.label << ',' << sub.application << ',' << sub.orders.bch << ','
       << (sub.orders.symmetrized ? 1 : 0) << ',' << sub.orders.trotter << ','
       << r.slices[last] << ',' << r.gate_count[last] << ',' << format_double(r.t[last]) << ','
       << format_double(r.op_norm_error[last]) << ',' << format_double(r.autocorr_error[last])
       << ',';
    if (r.fit && r.fit_reliable) os << format_double(r.fit->exponent);
    os << ',';
    if (r.fit) os << format_double(r.fit->residual);
    os << '\n';
    out.push_back(std::move(art));
  }
  std::filesystem::create_directories(opt.out_dir);
  const auto path = opt.out_dir / (cfg.name + "_sweep.csv");
  write_atomic(path, os.str());
  if (!out.empty()) out.back().written.push_back(path);
  return out;
}

}  // namespace bosynth
