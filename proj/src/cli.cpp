#include "rsos/cli.hpp"

#include "rsos/algebra.hpp"
#include "rsos/cache.hpp"
#include "rsos/characters.hpp"
#include "rsos/energy.hpp"
#include "rsos/json_io.hpp"
#include "rsos/model.hpp"
#include "rsos/onedsum.hpp"
#include "rsos/parallel.hpp"
#include "rsos/paths.hpp"
#include "rsos/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rsos {

namespace {

using nlohmann::json;

constexpr const char* kCsvVersion = "#rsos-csv/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  bool pass = true;
  json failures = json::array();
};

std::string format_of(const RunConfig& cfg, const char* fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void emit_series_csv(std::ostream& out, const QSeries& s) {
  out << kCsvVersion << '\n' << "quarters,coefficient\n";
  for (const auto& [e, c] : s.terms()) out << e.quarters << ',' << c << '\n';
}

json model_params(const ModelSpec& spec) {
  return {{"m", spec.m()}, {"m_prime", spec.m_prime()}, {"fusion", spec.fusion()}};
}

ModelSpec model_of(const RunConfig& cfg) {
  if (cfg.m == 0 || cfg.m_prime == 0) throw UsageError("--m and --mp are required");
  return ModelSpec(cfg.m, cfg.m_prime, cfg.fusion);
}

json failure_tuple(const ModelSpec& spec, int r, int s, int N) {
  return {{"m", spec.m()}, {"m_prime", spec.m_prime()}, {"r", r}, {"s", s}, {"N", N}};
}

std::string gamma_text(const std::optional<QExponent>& g) { return g ? to_string(*g) : ""; }

Outcome cmd_model(const RunConfig& cfg, std::ostream& out) {
  const ModelSpec spec = model_of(cfg);
  const BandStructure bs = band_structure(spec);
  const Rational lam = spec.lambda_over_pi();
  json doc = model_params(spec);
  doc["lambda_num"] = lam.numerator();
  doc["lambda_den"] = lam.denominator();
  doc["h"] = bs.h;
  doc["delta"] = bs.delta;
  doc["rho"] = bs.rho;
  doc["rho0"] = bs.rho0;
  doc["rho1"] = bs.rho1;
  doc["c"] = to_string(central_charge(spec));
  doc["shaded_band_counts"] = {{"n1", shaded_nband_count(spec, 1)}, {"n2", shaded_nband_count(spec, 2)}};
  if (format_of(cfg, "json") == "json") {
    emit_json(out, doc);
  } else {
    out << kCsvVersion << '\n' << "field,value\n";
    for (const auto& [key, value] : doc.items()) {
      if (value.is_object()) {
        for (const auto& [k2, v2] : value.items()) out << key << '.' << k2 << ',' << v2.dump() << '\n';
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& v : value) joined += (joined.empty() ? "" : " ") + v.dump();
        out << key << ',' << joined << '\n';
      } else {
        out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    }
  }
  return {};
}

LocalEnergyTable table_of(const RunConfig& cfg, const ModelSpec& spec) {
  if (cfg.table == "nonnegative") return local_energy(spec);
  if (cfg.table == "signed") {
    if (spec.fusion() != 2) throw UsageError("--table signed needs --fusion 2");
    return signed_local_energy_n2(spec);
  }
  if (cfg.table == "forrester-baxter") {
    if (spec.fusion() != 1) throw UsageError("--table forrester-baxter needs --fusion 1");
    return forrester_baxter_n1(spec);
  }
  throw UsageError("--table must be nonnegative, signed or forrester-baxter");
}

Outcome cmd_energy(const RunConfig& cfg, std::ostream& out) {
  const ModelSpec spec = model_of(cfg);
  const LocalEnergyTable t = table_of(cfg, spec);
  if (format_of(cfg, "csv") == "csv") {
    out << kCsvVersion << '\n' << "d,a,b,quarters\n";
    for (const Triple& x : t.triples()) out << x.d << ',' << x.a << ',' << x.b << ',' << t.at(x).quarters << '\n';
  } else {
    json doc = model_params(spec);
    doc["table"] = cfg.table;
    json rows = json::array();
    for (const Triple& x : t.triples()) rows.push_back({x.d, x.a, x.b, t.at(x).quarters});
    doc["entries"] = rows;
    emit_json(out, doc);
  }
  return {};
}

Outcome cmd_paths(const RunConfig& cfg, std::ostream& out) {
  const ModelSpec spec = model_of(cfg);
  const std::string fmt = format_of(cfg, "json");
  if (cfg.count_only) {
    const auto n = count_paths(spec, cfg.a, cfg.b, cfg.c, cfg.N);
    if (fmt == "json") {
      json doc = model_params(spec);
      doc.update({{"a", cfg.a}, {"b", cfg.b}, {"c", cfg.c}, {"N", cfg.N}, {"count", n}});
      emit_json(out, doc);
    } else {
      out << kCsvVersion << '\n' << "count\n" << n << '\n';
    }
    return {};
  }
  if (fmt == "json") {
    json list = json::array();
    for_each_path(spec, cfg.a, cfg.b, cfg.c, cfg.N, [&](const std::vector<int>& h) { list.push_back(h); });
    out << list.dump() << '\n';
  } else {
    out << kCsvVersion << '\n';
    for (int i = 0; i <= cfg.N + 1; ++i) out << (i ? "," : "") << "sigma" << i;
    out << '\n';
    for_each_path(spec, cfg.a, cfg.b, cfg.c, cfg.N, [&](const std::vector<int>& h) {
      for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
      out << '\n';
    });
  }
  return {};
}

QSeries onedsum_by(const RunConfig& cfg, const ModelSpec& spec, const std::string& method, const SeriesCache* cache) {
  CacheKey key;
  key.m = spec.m();
  key.m_prime = spec.m_prime();
  key.fusion = spec.fusion();
  key.a = cfg.a;
  key.b = cfg.b;
  key.c = cfg.c;
  key.N = cfg.N;
  key.method = method;
  if (cache) {
    if (auto hit = cache->get(key)) return *hit;
  }
  QSeries x = method == "brute" ? brute_force_X(spec, cfg.a, cfg.b, cfg.c, cfg.N)
                                : recursive_X(spec, cfg.c, cfg.N).at(cfg.a, cfg.b);
  if (cache) cache->put(key, x);
  return x;
}

Outcome cmd_onedsum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelSpec spec = model_of(cfg);
  if (cfg.method != "brute" && cfg.method != "recursive" && cfg.method != "both") {
    throw UsageError("--method must be brute, recursive or both");
  }
  for (int h : {cfg.a, cfg.b, cfg.c}) {
    if (h < 1 || h > spec.max_height()) throw UsageError("heights must lie in 1..m'-1");
  }
  if (!adjacent(spec, cfg.b, cfg.c)) throw UsageError("b and c must be adjacent");
  std::unique_ptr<SeriesCache> cache;
  if (!cfg.cache_dir.empty()) cache = std::make_unique<SeriesCache>(cfg.cache_dir, &err);

  Outcome outcome;
  QSeries x;
  json doc = model_params(spec);
  doc.update({{"a", cfg.a}, {"b", cfg.b}, {"c", cfg.c}, {"N", cfg.N}, {"method", cfg.method}});
  if (cfg.method == "both") {
    const QSeries brute = onedsum_by(cfg, spec, "brute", cache.get());
    x = onedsum_by(cfg, spec, "recursive", cache.get());
    doc["agree"] = brute == x;
    if (!(brute == x)) {
      outcome.pass = false;
      outcome.failures.push_back({{"check", "brute == recursive"},
                                  {"brute", to_string(brute)},
                                  {"recursive", to_string(x)}});
    }
  } else {
    x = onedsum_by(cfg, spec, cfg.method, cache.get());
  }
  if (format_of(cfg, "json") == "json") {
    doc["series"] = to_json(x);
    doc["text"] = to_string(x);
    emit_json(out, doc);
  } else {
    emit_series_csv(out, x);
  }
  return outcome;
}

Outcome cmd_bosonic(const RunConfig& cfg, std::ostream& out) {
  const ModelSpec spec = model_of(cfg);
  const Heights h = sector_map(spec, cfg.r, cfg.s);
  const QSeries bos = bosonic_finitized(spec, cfg.r, cfg.s, cfg.N);
  const QSeries lat = recursive_X(spec, h.c, cfg.N).at(h.a, h.b);
  std::optional<QExponent> gb, gl;
  QSeries nb, nl;
  if (!bos.is_zero()) std::tie(nb, gb) = normalize(bos);
  if (!lat.is_zero()) std::tie(nl, gl) = normalize(lat);
  const bool agree = nb == nl;
  Outcome outcome;
  if (!agree) {
    outcome.pass = false;
    outcome.failures.push_back(failure_tuple(spec, cfg.r, cfg.s, cfg.N));
  }
  if (format_of(cfg, "json") == "json") {
    json doc = model_params(spec);
    doc.update({{"r", cfg.r}, {"s", cfg.s}, {"a", h.a}, {"b", h.b}, {"c", h.c}, {"N", cfg.N}});
    doc["bosonic"] = to_json(bos);
    doc["lattice"] = to_json(lat);
    doc["normalized_bosonic"] = to_string(nb);
    doc["normalized_lattice"] = to_string(nl);
    doc["gamma_bosonic"] = gamma_text(gb);
    doc["gamma_lattice"] = gamma_text(gl);
    doc["agree"] = agree;
    emit_json(out, doc);
  } else {
    emit_series_csv(out, bos);
  }
  return outcome;
}

Outcome cmd_character(const RunConfig& cfg, std::ostream& out) {
  json doc;
  QSeries x;
  if (cfg.kind == "kac") {
    x = kac_character(cfg.r, cfg.s, cfg.K);
    doc = {{"kind", cfg.kind}, {"r", cfg.r}, {"s", cfg.s}, {"K", cfg.K}};
  } else {
    const ModelSpec spec = model_of(cfg);
    doc = model_params(spec);
    doc.update({{"kind", cfg.kind}, {"r", cfg.r}, {"s", cfg.s}});
    if (cfg.kind == "bosonic") {
      x = bosonic_finitized(spec, cfg.r, cfg.s, cfg.N);
      doc["N"] = cfg.N;
    } else if (cfg.kind == "lattice") {
      QExponent gamma;
      std::tie(x, gamma) = normalized_sum(spec, cfg.r, cfg.s, cfg.N);
      doc["N"] = cfg.N;
      doc["gamma"] = to_string(gamma);
    } else if (cfg.kind == "virasoro") {
      x = virasoro_character(spec, cfg.r, cfg.s, cfg.K);
      doc["K"] = cfg.K;
      doc["conformal_weight"] = to_string(conformal_weight(spec, cfg.r, cfg.s));
      doc["central_charge"] = to_string(central_charge(spec));
    } else {
      throw UsageError("--kind must be bosonic, lattice, virasoro or kac");
    }
  }
  if (format_of(cfg, "json") == "json") {
    doc["series"] = to_json(x);
    doc["text"] = to_string(x);
    emit_json(out, doc);
  } else {
    emit_series_csv(out, x);
  }
  return {};
}

Outcome cmd_loglimit(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p == 0 || cfg.p_prime == 0) throw UsageError("--p and --pp are required");
  const LogLimitReport rep = log_limit_check(cfg.p, cfg.p_prime, cfg.r, cfg.s, cfg.N, cfg.K);
  Outcome outcome;
  outcome.pass = rep.stabilized && rep.kac_pass;
  if (!outcome.pass) {
    outcome.failures.push_back({{"p", cfg.p}, {"p_prime", cfg.p_prime}, {"r", cfg.r}, {"s", cfg.s}, {"N", cfg.N},
                                {"stabilized", rep.stabilized}, {"kac_pass", rep.kac_pass}});
  }
  const auto [a, b] = log_sector_heights(cfg.p, cfg.p_prime, cfg.r, cfg.s);
  if (format_of(cfg, "json") == "json") {
    json seq = json::array();
    for (const auto& pt : rep.sequence) {
      seq.push_back({{"m", pt.m}, {"m_prime", pt.m_prime}, {"heights_match", pt.heights_match}, {"equal", pt.equal}});
    }
    json doc = {{"p", cfg.p}, {"p_prime", cfg.p_prime}, {"r", cfg.r}, {"s", cfg.s}, {"a", a}, {"b", b},
                {"N", cfg.N}, {"K", cfg.K}, {"sequence", seq}, {"stabilized", rep.stabilized},
                {"kac_pass", rep.kac_pass}, {"pass", outcome.pass}};
    const QSeries lf = log_finitized(cfg.p, cfg.p_prime, cfg.r, cfg.s, cfg.N);
    doc["log_finitized"] = to_json(lf);
    doc["text"] = to_string(lf);
    if (rep.kac_first_difference) doc["kac_first_difference"] = to_string(*rep.kac_first_difference);
    emit_json(out, doc);
  } else {
    out << kCsvVersion << '\n' << "m,m_prime,heights_match,equal\n";
    for (const auto& pt : rep.sequence) {
      out << pt.m << ',' << pt.m_prime << ',' << pt.heights_match << ',' << pt.equal << '\n';
    }
  }
  return outcome;
}

struct SectorRow {
  int m, m_prime, r, s, N;
  bool pass;
  std::string gamma_lattice, gamma_bosonic;
};

Outcome cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<GridEntry> grid;
  if (cfg.m || cfg.m_prime) {
    const ModelSpec spec = model_of(cfg);
    grid.push_back({spec.m(), spec.m_prime(), cfg.N > 0 ? cfg.N : 12});
  } else {
    grid = conjecture_grid();
  }
  std::vector<std::vector<SectorRow>> rows(grid.size());
  parallel_for(grid.size(), cfg.jobs, [&](std::size_t i) {
    const ModelSpec spec(grid[i].m, grid[i].m_prime, 2);
    const BosonicReport rep = verify_bosonic(spec, grid[i].N_max);
    std::map<std::pair<int, int>, SectorRow> summary;
    for (const auto& chk : rep.checks) {
      SectorRow row{spec.m(), spec.m_prime(), chk.r, chk.s, chk.N, chk.pass, gamma_text(chk.gamma_lattice),
                    gamma_text(chk.gamma_bosonic)};
      if (cfg.all_n) {
        rows[i].push_back(row);
        continue;
      }
      auto [it, fresh] = summary.try_emplace({chk.r, chk.s}, row);
      // Keep the first failure, else the largest N.
      if (!fresh && it->second.pass) it->second = row;
    }
    for (const auto& [key, row] : summary) rows[i].push_back(row);
  });

  Outcome outcome;
  json list = json::array();
  const bool csv = format_of(cfg, "csv") == "csv";
  if (csv) out << kCsvVersion << '\n' << "m,m_prime,r,s,N,status,gamma_lattice,gamma_bosonic\n";
  for (const auto& model_rows : rows) {
    for (const auto& row : model_rows) {
      if (!row.pass) {
        outcome.pass = false;
        outcome.failures.push_back({{"m", row.m}, {"m_prime", row.m_prime}, {"r", row.r}, {"s", row.s}, {"N", row.N}});
      }
      if (csv) {
        out << row.m << ',' << row.m_prime << ',' << row.r << ',' << row.s << ',' << row.N << ','
            << (row.pass ? "pass" : "fail") << ',' << row.gamma_lattice << ',' << row.gamma_bosonic << '\n';
      } else {
        list.push_back({{"m", row.m}, {"m_prime", row.m_prime}, {"r", row.r}, {"s", row.s}, {"N", row.N},
                        {"status", row.pass ? "pass" : "fail"}, {"gamma_lattice", row.gamma_lattice},
                        {"gamma_bosonic", row.gamma_bosonic}});
      }
    }
  }
  if (!csv) emit_json(out, list);
  return outcome;
}

Outcome cmd_jm(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k < 1) throw UsageError("--k must be at least 1");
  const JmReport rep = jm_check(cfg.k, cfg.N);
  Outcome outcome;
  outcome.pass = rep.bijection && rep.half_energy_constant;
  if (!rep.bijection) outcome.failures.push_back({{"check", "bijection"}, {"k", rep.k}, {"N", rep.N}});
  if (!rep.half_energy_constant) {
    outcome.failures.push_back({{"check", "E_JM - E_RSOS/2 constant per endpoint class"},
                                {"k", rep.k},
                                {"N", rep.N},
                                {"counterexample", rep.half_energy_counterexample}});
  }
  json doc = {{"k", rep.k},
              {"N", rep.N},
              {"model", describe(jm_model(rep.k))},
              {"jm_count", rep.jm_count},
              {"rsos_count", rep.rsos_count},
              {"round_trips", rep.round_trips},
              {"bijection", rep.bijection},
              {"half_energy_constant", rep.half_energy_constant},
              {"half_energy_counterexample", rep.half_energy_counterexample},
              {"boundary_relation", rep.boundary_relation},
              {"boundary_counterexample", rep.boundary_counterexample}};
  if (format_of(cfg, "json") == "json") {
    emit_json(out, doc);
  } else {
    out << kCsvVersion << '\n' << "field,value\n";
    for (const auto& [key, value] : doc.items()) {
      out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return outcome;
}

Outcome cmd_ybe(const RunConfig& cfg, std::ostream& out) {
  const ModelSpec spec = model_of(cfg);
  const double tol = cfg.tol.value_or(1e-10);
  if (cfg.t < 0 || cfg.t >= 1) throw UsageError("--t must lie in [0, 1)");
  std::optional<FaceWeightSet> w;
  if (spec.fusion() == 1) {
    w.emplace(weights_1x1(spec, cfg.t));
  } else if (cfg.source == "closed") {
    w.emplace(weights_2x2_closed(spec, cfg.t, tol));
  } else if (cfg.source == "fused") {
    w.emplace(fuse_2x2(weights_1x1(spec.with_fusion(1), cfg.t), tol));
  } else {
    throw UsageError("--source must be closed or fused");
  }
  const YbeScan scan = ybe_scan(*w, cfg.samples, cfg.seed);
  Outcome outcome;
  outcome.pass = scan.max_residual < tol;
  if (!outcome.pass) {
    outcome.failures.push_back({{"check", "ybe"}, {"m", spec.m()}, {"m_prime", spec.m_prime()},
                                {"fusion", spec.fusion()}, {"t", cfg.t}, {"max_residual", scan.max_residual}});
  }
  json doc = model_params(spec);
  doc.update({{"t", cfg.t}, {"samples", scan.samples}, {"max_residual", scan.max_residual}, {"tol", tol},
              {"pass", outcome.pass}});
  if (spec.fusion() == 2) doc["source"] = cfg.source;
  if (format_of(cfg, "json") == "json") {
    emit_json(out, doc);
  } else {
    out << kCsvVersion << '\n' << "m,m_prime,fusion,t,samples,max_residual,pass\n";
    out << spec.m() << ',' << spec.m_prime() << ',' << spec.fusion() << ',' << cfg.t << ',' << scan.samples << ','
        << scan.max_residual << ',' << outcome.pass << '\n';
  }
  return outcome;
}

Outcome cmd_algebra(const RunConfig& cfg, std::ostream& out) {
  const ModelSpec spec = model_of(cfg).with_fusion(2);
  const double tol = cfg.tol.value_or(1e-10);
  if (cfg.sites < 3) throw UsageError("--sites must be at least 3");
  AlgebraReport total = check_loop_contractions(spec);
  for (int a0 = 1; a0 <= spec.max_height(); ++a0) {
    const OperatorRep rep = build_operator_rep(spec, cfg.sites, a0);
    if (rep.basis.empty()) continue;
    merge_into(total, check_algebra(rep, tol, std::nullopt, cfg.seed));
  }
  Outcome outcome;
  outcome.pass = total.pass;
  json rel = json::array();
  for (const auto& r : total.relations) {
    rel.push_back({{"name", r.name}, {"residual", r.residual}, {"pass", r.pass}, {"diagnostic", r.diagnostic}});
    if (!r.pass && !r.diagnostic) {
      outcome.failures.push_back({{"check", r.name}, {"m", spec.m()}, {"m_prime", spec.m_prime()},
                                  {"sites", cfg.sites}, {"residual", r.residual}});
    }
  }
  if (format_of(cfg, "json") == "json") {
    json doc = {{"m", spec.m()}, {"m_prime", spec.m_prime()}, {"sites", cfg.sites}, {"tol", tol},
                {"pass", total.pass}, {"relations", rel}};
    emit_json(out, doc);
  } else {
    out << kCsvVersion << '\n' << "relation,residual,pass,diagnostic\n";
    for (const auto& r : total.relations) {
      out << '"' << r.name << "\"," << r.residual << ',' << r.pass << ',' << r.diagnostic << '\n';
    }
  }
  return outcome;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
    Outcome o;
    const std::string& cmd = cfg.subcommand;
    if (cmd == "model") o = cmd_model(cfg, out);
    else if (cmd == "energy") o = cmd_energy(cfg, out);
    else if (cmd == "paths") o = cmd_paths(cfg, out);
    else if (cmd == "onedsum") o = cmd_onedsum(cfg, out, err);
    else if (cmd == "bosonic") o = cmd_bosonic(cfg, out);
    else if (cmd == "character") o = cmd_character(cfg, out);
    else if (cmd == "loglimit") o = cmd_loglimit(cfg, out);
    else if (cmd == "verify") o = cmd_verify(cfg, out);
    else if (cmd == "jm") o = cmd_jm(cfg, out);
    else if (cmd == "ybe") o = cmd_ybe(cfg, out);
    else if (cmd == "algebra") o = cmd_algebra(cfg, out);
    else throw UsageError("unknown subcommand '" + cmd + "'");
    if (!o.pass) {
      err << json{{"failures", o.failures}}.dump() << '\n';
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact one-dimensional sums, characters and integrability checks for RSOS(m,m') models", "rsos"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "json or csv (default depends on the subcommand)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached one-dimensional sums");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Tolerance for numeric checks");

  auto model_opts = [&](CLI::App* sub, bool required) {
    auto* m = sub->add_option("--m", cfg.m, "m");
    auto* mp = sub->add_option("--mp", cfg.m_prime, "m'");
    if (required) {
      m->required();
      mp->required();
    }
    sub->add_option("--fusion", cfg.fusion, "Fusion level (1 or 2)");
  };

  auto* model = app.add_subcommand("model", "Band structure and conformal data");
  model_opts(model, true);

  auto* energy = app.add_subcommand("energy", "Local energy table");
  model_opts(energy, true);
  energy->add_option("--table", cfg.table, "nonnegative, signed (n=2) or forrester-baxter (n=1)");

  auto* paths = app.add_subcommand("paths", "Enumerate paths");
  model_opts(paths, true);
  paths->add_option("--a", cfg.a)->required();
  paths->add_option("--b", cfg.b)->required();
  paths->add_option("--c", cfg.c)->required();
  paths->add_option("--N", cfg.N)->required();
  paths->add_flag("--count-only", cfg.count_only);

  auto* onedsum = app.add_subcommand("onedsum", "One-dimensional sum X_abc^(N)");
  model_opts(onedsum, true);
  onedsum->add_option("--a", cfg.a)->required();
  onedsum->add_option("--b", cfg.b)->required();
  onedsum->add_option("--c", cfg.c)->required();
  onedsum->add_option("--N", cfg.N)->required();
  onedsum->add_option("--method", cfg.method, "brute, recursive or both");

  auto* bosonic = app.add_subcommand("bosonic", "Bosonic finitized character against the lattice sum");
  model_opts(bosonic, true);
  bosonic->add_option("--r", cfg.r)->required();
  bosonic->add_option("--s", cfg.s)->required();
  bosonic->add_option("--N", cfg.N)->required();

  auto* character = app.add_subcommand("character", "Emit a character series");
  model_opts(character, false);
  character->add_option("--kind", cfg.kind, "bosonic, lattice, virasoro or kac");
  character->add_option("--r", cfg.r)->required();
  character->add_option("--s", cfg.s)->required();
  character->add_option("--N", cfg.N, "Path length (bosonic, lattice)");
  character->add_option("--K", cfg.K, "Truncation order (virasoro, kac)");

  auto* loglimit = app.add_subcommand("loglimit", "Logarithmic limit of the finitized characters");
  loglimit->add_option("--p", cfg.p)->required();
  loglimit->add_option("--pp", cfg.p_prime)->required();
  loglimit->add_option("--r", cfg.r)->required();
  loglimit->add_option("--s", cfg.s)->required();
  loglimit->add_option("--N", cfg.N)->required();
  loglimit->add_option("--K", cfg.K, "Order of the Kac character comparison");

  auto* verify = app.add_subcommand("verify", "Lattice sums against bosonic forms over the model grid");
  model_opts(verify, false);
  verify->add_option("--N", cfg.N, "Largest N when a single model is given");
  verify->add_flag("--all-n", cfg.all_n, "One row per N instead of one per sector");

  auto* jm = app.add_subcommand("jm", "Half-integer path bijection and energies");
  jm->add_option("--k", cfg.k)->required();
  jm->add_option("--N", cfg.N)->required();

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter residuals of the face weights");
  model_opts(ybe, true);
  ybe->add_option("--t", cfg.t, "Nome in [0, 1)");
  ybe->add_option("--samples", cfg.samples);
  ybe->add_option("--seed", cfg.seed);
  ybe->add_option("--source", cfg.source, "closed or fused (fusion 2)");

  auto* algebra = app.add_subcommand("algebra", "Relations of the fused generators");
  model_opts(algebra, true);
  algebra->add_option("--sites", cfg.sites, "L");
  algebra->add_option("--seed", cfg.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace rsos
