#include "costas/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "costas/counting.hpp"
#include "costas/ff.hpp"
#include "costas/golomb.hpp"
#include "costas/numtheory.hpp"
#include "costas/parallel.hpp"
#include "costas/serialize.hpp"
#include "costas/xcorr.hpp"

namespace costas::cli {

using nlohmann::json;

namespace {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fmt_num(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 1e15) return std::to_string(static_cast<long long>(x));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string fmt_delta(std::optional<double> delta) { return delta ? fmt_num(*delta) : std::string(); }

FieldElement parse_element(const Field& field, const std::string& text, const char* name) {
  try {
    std::size_t used = 0;
    FieldElement e;
    if (text.rfind("d:", 0) == 0) {
      const long long k = std::stoll(text.substr(2), &used);
      if (used != text.size() - 2) throw InvalidInput("");
      e = field.exp(k);
    } else {
      const long long enc = std::stoll(text, &used);
      if (used != text.size() || enc < 0) throw InvalidInput("");
      e = field.element(static_cast<std::uint64_t>(enc));
    }
    if (!field.is_primitive(e))
      throw InvalidInput(std::string(name) + " = " + text + " (enc " + std::to_string(e.enc) + ") is not primitive in GF(" +
                         std::to_string(field.q()) + ")");
    return e;
  } catch (const InvalidInput& ex) {
    if (*ex.what()) throw;
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string(name) + ": expected an encoding or d:<dlog>, got '" + text + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot open " + path + " for writing");
  f << text;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void check_budget(double work, double budget, const std::string& what) {
  if (work > budget) {
    std::ostringstream os;
    os << what << ": estimated " << work << " correlation steps exceed the budget " << budget
       << "; raise --budget or COSTAS_LAB_BUDGET";
    throw BudgetExceeded(os.str());
  }
}

ShiftSet parse_shift_set(std::uint64_t q, const std::string& spec) {
  int u0, u1, v0, v1;
  char c1, c2, c3;
  std::istringstream is(spec);
  if (is >> u0 >> c1 >> u1 >> c2 >> v0 >> c3 >> v1 && c1 == ':' && c2 == ',' && c3 == ':' && (is >> std::ws).eof()) {
    if (u0 > u1 || v0 > v1) throw InvalidInput("--S rectangle bounds must be ordered");
    return ShiftSet::rectangle(q, u0, u1, v0, v1);
  }
  std::ifstream f(spec);
  if (!f) throw InvalidInput("--S: '" + spec + "' is neither a rectangle u0:u1,v0:v1 nor a readable file");
  std::vector<Shift> shifts;
  if ((f >> std::ws).peek() == '[') {
    const json doc = read_json_file(spec);
    for (const auto& p : doc) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("--S file: entries must be [u, v] pairs");
      shifts.push_back({p[0].get<int>(), p[1].get<int>()});
    }
  } else {
    std::string line;
    while (std::getline(f, line)) {
      for (char& ch : line)
        if (ch == ',') ch = ' ';
      std::istringstream ls(line);
      if ((ls >> std::ws).peek() == '#' || ls.eof()) continue;
      Shift s;
      if (!(ls >> s.u >> s.v)) throw InvalidInput("--S file: cannot parse line '" + line + "'");
      shifts.push_back(s);
    }
  }
  return ShiftSet(q, std::move(shifts));
}

bool row_passes(const SurveyRow& row) {
  if (!row.exact) return false;
  return row.kind == BoundKind::Exact ? *row.exact == row.bound : *row.exact <= row.bound + 1e-9;
}

struct FamilyJob {
  Family family;
  double bound = 0.0;
  BoundKind kind = BoundKind::UpperBound;
};

FamilyJob make_job(const Field& field, const std::string& kind, std::optional<double> delta,
                   std::optional<FieldElement> g2) {
  FamilyJob job;
  if (kind == "G" || kind == "L") {
    const CGqBound b = bound_CGq(field.q());
    job.bound = static_cast<double>(b.value);
    job.kind = b.kind;
    job.family = kind == "G" ? family_G(field, g2.value_or(field.generator())) : family_L(field);
  } else if (kind == "Ldelta") {
    if (!delta) throw InvalidInput("--family Ldelta needs --delta");
    job.family = subfamily(field, *delta).family;
    job.bound = theorem1_bound(field.q(), *delta).sharp;
  } else {
    throw InvalidInput("unknown family '" + kind + "' (expected G, L or Ldelta)");
  }
  return job;
}

SurveyRow run_row(const Field& field, const std::string& kind, std::optional<double> delta,
                  std::optional<FieldElement> g2, unsigned threads, double budget, FamilyMaxReport* report) {
  SurveyRow row;
  row.q = field.q();
  row.family = kind;
  row.delta = kind == "Ldelta" ? delta : std::nullopt;
  FamilyJob job = make_job(field, kind, delta, g2);
  row.family_size = job.family.members.size();
  row.bound = job.bound;
  row.kind = job.kind;
  ScanOptions opt;
  opt.threads = threads;
  check_budget(estimate_family_work(job.family, opt), budget, job.family.name);
  const auto t0 = std::chrono::steady_clock::now();
  FamilyMaxReport rep = family_max(job.family, opt);
  row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  row.exact = rep.value;
  row.pass = row_passes(row);
  if (report) *report = std::move(rep);
  return row;
}

json row_to_json(const SurveyRow& row, bool timing) {
  json doc = {{"q", row.q}, {"family", row.family}};
  doc["delta"] = row.delta ? json(*row.delta) : json(nullptr);
  doc["family_size"] = row.family_size;
  doc["exact"] = row.exact ? json(*row.exact) : json(nullptr);
  doc["bound"] = row.bound;
  doc["bound_kind"] = row.kind == BoundKind::Exact ? "Exact" : "UpperBound";
  doc["pass"] = row.pass ? json(*row.pass) : json(nullptr);
  doc["status"] = row.status;
  if (timing && row.wall_time) doc["wall_time"] = *row.wall_time;
  return doc;
}

struct Common {
  std::optional<double> budget;
  unsigned threads = default_threads();
  std::string out_path;
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// --- subcommands ---------------------------------------------------------

int cmd_field(std::uint64_t q, const Common& c, std::ostream& out) {
  const Field field = Field::from_order(q);
  emit(dump(field_to_json(field)), c.out_path, out);
  return kOk;
}

int cmd_perm(std::uint64_t q, const std::string& g1s, const std::string& g2s, const Common& c, std::ostream& out) {
  const Field field = Field::from_order(q);
  const GolombPair pair{parse_element(field, g1s, "g1"), parse_element(field, g2s, "g2")};
  emit(dump(permutation_to_json(field, golomb_perm(field, pair))), c.out_path, out);
  return kOk;
}

int cmd_verify(const std::string& path, const Common& c, std::ostream& out) {
  const json doc = read_json_file(path);
  CostasPermutation perm;
  try {
    perm = permutation_from_json(doc);
  } catch (const std::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  json res = {{"n", perm.size()}};
  bool ok = true;
  try {
    require_permutation(perm.view());
    res["costas"] = is_costas(perm.view());
    ok = res["costas"].get<bool>();
  } catch (const NotAPermutation& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("q") && doc.contains("g1_enc") && doc.contains("g2_enc")) {
    const Field field = Field::from_order(doc.at("q").get<std::uint64_t>());
    const GolombPair pair{field.element(doc.at("g1_enc").get<std::uint64_t>()),
                          field.element(doc.at("g2_enc").get<std::uint64_t>())};
    const bool match = golomb_perm(field, pair).values == perm.values;
    res["matches_construction"] = match;
    ok = ok && match;
  }
  res["pass"] = ok;
  emit(dump(res), c.out_path, out);
  return ok ? kOk : kAssertionFailed;
}

int cmd_family_max(std::uint64_t q, const std::string& kind, std::optional<double> delta,
                   const std::optional<std::string>& g2s, const std::string& format, bool timing, const Common& c,
                   std::ostream& out) {
  const Field field = Field::from_order(q);
  std::optional<FieldElement> g2;
  if (g2s) g2 = parse_element(field, *g2s, "g2");
  FamilyMaxReport rep;
  const SurveyRow row = run_row(field, kind, delta, g2, c.threads, resolve_budget(c.budget), &rep);
  SurveyRow printed = row;
  if (!timing) printed.wall_time.reset();
  if (format == "csv") {
    emit(survey_header() + survey_csv(printed), c.out_path, out);
  } else {
    json doc = report_to_json(rep);
    doc["row"] = row_to_json(row, timing);
    emit(dump(doc), c.out_path, out);
  }
  return *row.pass ? kOk : kAssertionFailed;
}

int cmd_survey(std::uint64_t qmin, std::uint64_t qmax, const std::string& kind, std::optional<double> delta,
               bool timing, const Common& c, std::ostream& out, std::ostream& err) {
  if (kind != "G" && kind != "L" && kind != "Ldelta") throw InvalidInput("unknown family '" + kind + "'");
  if (kind == "Ldelta" && !delta) throw InvalidInput("--family Ldelta needs --delta");
  const double budget = resolve_budget(c.budget);

  std::set<std::string> done;
  bool need_header = true;
  if (!c.out_path.empty()) {
    std::ifstream in(c.out_path);
    std::string line;
    if (in && std::getline(in, line)) {
      if (line != kCsvVersionLine) throw InvalidInput(c.out_path + " exists and is not a costas-lab v1 survey file");
      need_header = false;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("q,", 0) == 0) continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        for (std::string col; std::getline(ls, col, ',');) cols.push_back(col);
        // Skipped rows are retried on the next run.
        if (cols.size() >= 9 && cols[8] != "skipped_budget") done.insert(cols[0] + "," + cols[1] + "," + cols[2]);
      }
    }
  }
  std::ofstream file;
  if (!c.out_path.empty()) {
    file.open(c.out_path, std::ios::app);
    if (!file) throw InvalidInput("cannot open " + c.out_path + " for appending");
  }
  std::ostream& sink = c.out_path.empty() ? out : file;
  if (need_header) sink << survey_header() << std::flush;

  bool all_pass = true;
  const std::uint64_t lo = std::max<std::uint64_t>(qmin, 4);
  for (std::uint64_t q : qmin > qmax ? std::vector<std::uint64_t>{} : nt::prime_powers(lo, qmax)) {
    const std::optional<double> d = kind == "Ldelta" ? delta : std::nullopt;
    if (done.count(survey_key(q, kind, d))) continue;
    SurveyRow row;
    if (kind == "Ldelta" && (q <= 7 || nt::classify_safe(q).kind == nt::SafeKind::NotSafe)) {
      row.q = q;
      row.family = kind;
      row.delta = d;
      row.status = "not_applicable";
    } else {
      const Field field = Field::from_order(q);
      try {
        row = run_row(field, kind, d, std::nullopt, c.threads, budget, nullptr);
      } catch (const BudgetExceeded& e) {
        const FamilyJob job = make_job(field, kind, d, std::nullopt);
        row.q = q;
        row.family = kind;
        row.delta = d;
        row.family_size = job.family.members.size();
        row.bound = job.bound;
        row.kind = job.kind;
        row.status = "skipped_budget";
        err << "skip q=" << q << ": " << e.what() << "\n";
      }
    }
    if (row.pass && !*row.pass) {
      all_pass = false;
      err << "FAIL q=" << q << " family " << kind << ": exact " << *row.exact << " vs bound " << fmt_num(row.bound)
          << "\n";
    }
    if (!timing) row.wall_time.reset();
    sink << survey_csv(row) << std::flush;
  }
  return all_pass ? kOk : kAssertionFailed;
}

int cmd_count(const std::string& mode, std::uint64_t q, std::uint64_t B, const std::optional<std::string>& g1s,
              const std::optional<std::string>& g2s, std::optional<std::uint64_t> r, std::optional<std::uint64_t> s,
              const std::optional<std::string>& S, int u, int v, const Common& c, std::ostream& out) {
  const Field field = Field::from_order(q);
  CountResult res;
  if (mode == "N") {
    if (!g1s || !g2s || !r || !s || !S) throw InvalidInput("count N needs --g1 --g2 --r --s --S");
    const GolombPair first{parse_element(field, *g1s, "g1"), parse_element(field, *g2s, "g2")};
    const ExponentPair ep = make_exponent_pair(q, *r, *s);
    res = count_N(field, first, partner(field, first, ep), B, parse_shift_set(q, *S));
  } else if (mode == "M") {
    const double phi = static_cast<double>(nt::euler_phi(q - 1));
    check_budget(phi * phi * phi * static_cast<double>(q), resolve_budget(c.budget), "count M");
    res = count_M(field, u, v, B, c.threads);
  } else {
    throw InvalidInput("count mode must be N or M");
  }
  emit(dump(report_to_json(res)), c.out_path, out);
  return res.chain_holds ? kOk : kAssertionFailed;
}

int cmd_bounds(std::uint64_t q, std::uint64_t r, std::uint64_t s, const std::string& mode, bool exact,
               const Common& c, std::ostream& out) {
  if (mode != "certified" && mode != "all") throw InvalidInput("--mode must be certified or all");
  const ExponentPair ep = make_exponent_pair(q, r, s);
  BoundReport rep = bound_pair(q, ep, mode == "all" ? BoundMode::All : BoundMode::Certified);
  bool ok = true;
  if (exact) {
    const Field field = Field::from_order(q);
    const double phi = static_cast<double>(nt::euler_phi(q - 1));
    const double n = static_cast<double>(q - 2);
    check_budget(phi * phi / field.w() * n * n, resolve_budget(c.budget), "bounds --exact");
    rep.exact = exhaustive_exponent_max(field, ep, c.threads);
    for (const auto& cand : rep.candidates)
      if (cand.certified && *rep.exact > cand.value + 1e-9) ok = false;
  }
  emit(dump(report_to_json(rep)), c.out_path, out);
  return ok ? kOk : kAssertionFailed;
}

int cmd_weil(std::uint64_t q, std::optional<std::uint64_t> s_flag, std::uint64_t samples, std::uint64_t seed,
             const Common& c, std::ostream& out) {
  const Field field = Field::from_order(q);
  std::vector<std::uint32_t> admissible;
  for (std::uint32_t s : field.primitive_exponents())
    if (s > 1 && s % field.p() != 0) admissible.push_back(s);
  if (s_flag && std::find(admissible.begin(), admissible.end(), *s_flag) == admissible.end())
    throw InvalidInput("--s " + std::to_string(*s_flag) + " is not admissible (need 1 < s <= q-2, gcd(s, q-1) = 1, p !| s)");
  if (admissible.empty()) throw InvalidInput("GF(" + std::to_string(q) + ") has no admissible exponent s");
  if (q < 4) throw InvalidInput("weil needs q >= 4");

  const auto prims = field.primitive_elements();
  const auto exps = field.primitive_exponents();
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  struct Sample {
    GolombPair first;
    ExponentPair ep;
    int u, v;
    std::uint32_t j;
  };
  std::vector<Sample> draws(samples);
  for (auto& d : draws) {
    d.first = {prims[pick(prims.size())], prims[pick(prims.size())]};
    const std::uint32_t s = s_flag ? static_cast<std::uint32_t>(*s_flag) : admissible[pick(admissible.size())];
    d.ep = make_exponent_pair(q, exps[pick(exps.size())], s);
    d.u = static_cast<int>(pick(q - 2));
    d.v = static_cast<int>(pick(q - 2));
    d.j = static_cast<std::uint32_t>(1 + pick(q - 2));
  }
  std::vector<double> ratio(samples);
  std::vector<char> pass(samples), recon(samples);
  parallel_for(samples, c.threads, [&](std::size_t i) {
    const Sample& d = draws[i];
    const WeilResult w = weil_oracle(field, d.first, d.ep, d.u, d.v, d.j);
    ratio[i] = w.magnitude / w.bound;
    pass[i] = w.pass;
    const double avg = character_average(field, d.first, d.ep, d.u, d.v);
    const auto count = solution_count(field, d.first, d.ep, d.u, d.v, EquationForm::Ceq);
    recon[i] = std::fabs(avg - static_cast<double>(count)) <= kWeilTolerance;
  });
  std::uint64_t passed = 0, recon_ok = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    passed += pass[i] != 0;
    recon_ok += recon[i] != 0;
    worst = std::max(worst, ratio[i]);
  }
  json doc = {{"q", q}, {"seed", seed}, {"samples", samples}};
  doc["s"] = s_flag ? json(*s_flag) : json(nullptr);
  doc["passed"] = passed;
  doc["reconstruction_matches"] = recon_ok;
  doc["max_magnitude_over_bound"] = worst;
  doc["tolerance"] = kWeilTolerance;
  emit(dump(doc), c.out_path, out);
  return passed == samples && recon_ok == samples ? kOk : kAssertionFailed;
}

}  // namespace

std::string survey_header() {
  return std::string(kCsvVersionLine) + "\nq,family,delta,family_size,exact,bound,bound_kind,pass,status,wall_time\n";
}

std::string survey_key(std::uint64_t q, const std::string& family, std::optional<double> delta) {
  return std::to_string(q) + "," + family + "," + fmt_delta(delta);
}

std::string survey_csv(const SurveyRow& row) {
  std::ostringstream os;
  os << survey_key(row.q, row.family, row.delta) << ',' << row.family_size << ','
     << (row.exact ? std::to_string(*row.exact) : "") << ',' << fmt_num(row.bound) << ','
     << (row.kind == BoundKind::Exact ? "Exact" : "UpperBound") << ','
     << (row.pass ? (*row.pass ? "true" : "false") : "") << ',' << row.status << ',';
  if (row.wall_time) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *row.wall_time);
    os << buf;
  }
  os << '\n';
  return os.str();
}

double resolve_budget(std::optional<double> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("COSTAS_LAB_BUDGET"); env && *env) {
    char* end = nullptr;
    const double b = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(b > 0)) throw InvalidInput(std::string("COSTAS_LAB_BUDGET is not a positive number: ") + env);
    return b;
  }
  return kDefaultBudget;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golomb Costas permutations: fields, families, cross-correlation, bounds"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--budget", common.budget, "max correlation steps (default 1e10, env COSTAS_LAB_BUDGET)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out_path, "output path (default stdout)");
  };

  std::uint64_t q = 0, qmin = 0, qmax = 0, B = 1, samples = 100, seed = 1;
  std::optional<double> delta;
  std::optional<std::string> g1, g2, S;
  std::optional<std::uint64_t> r, s;
  std::string family = "G", format = "json", mode = "certified", count_mode, path;
  int u = 0, v = 0;
  bool timing = false, exact = false;

  auto* field = app.add_subcommand("field", "describe GF(q)");
  field->add_option("--q", q)->required();
  add_common(field);

  auto* perm = app.add_subcommand("perm", "Golomb permutation for primitive g1, g2 (enc or d:<dlog>)");
  perm->add_option("--q", q)->required();
  perm->add_option("--g1", g1)->required();
  perm->add_option("--g2", g2)->required();
  add_common(perm);

  auto* verify = app.add_subcommand("verify", "check a permutation file for the Costas property");
  verify->add_option("file", path)->required();
  add_common(verify);

  auto* fmax = app.add_subcommand("family-max", "exhaustive maximal cross-correlation of a family");
  fmax->add_option("--q", q)->required();
  fmax->add_option("--family", family)->check(CLI::IsMember({"G", "L", "Ldelta"}));
  fmax->add_option("--delta", delta);
  fmax->add_option("--g2", g2, "fixed g2 for family G");
  fmax->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  fmax->add_flag("--timing", timing, "include wall time");
  add_common(fmax);

  auto* survey = app.add_subcommand("survey", "family-max over every prime power in [qmin, qmax]");
  survey->add_option("--qmin", qmin)->required();
  survey->add_option("--qmax", qmax)->required();
  survey->add_option("--family", family)->check(CLI::IsMember({"G", "L", "Ldelta"}));
  survey->add_option("--delta", delta);
  survey->add_flag("--timing", timing, "fill the wall_time column");
  add_common(survey);

  auto* count = app.add_subcommand("count", "N (shift set) or M (pairs of L_q) counts with their chains");
  count->add_option("mode", count_mode)->required()->check(CLI::IsMember({"N", "M"}));
  count->add_option("--q", q)->required();
  count->add_option("--B", B)->check(CLI::PositiveNumber);
  count->add_option("--g1", g1);
  count->add_option("--g2", g2);
  count->add_option("--r", r);
  count->add_option("--s", s);
  count->add_option("--S", S, "rectangle u0:u1,v0:v1 or a file of u,v pairs");
  count->add_option("--u", u);
  count->add_option("--v", v);
  add_common(count);

  auto* bounds = app.add_subcommand("bounds", "per-pair bound candidates for exponents (r, s)");
  bounds->add_option("--q", q)->required();
  bounds->add_option("--r", r)->required();
  bounds->add_option("--s", s)->required();
  bounds->add_option("--mode", mode)->check(CLI::IsMember({"certified", "all"}));
  bounds->add_flag("--exact", exact, "also compute the exhaustive maximum");
  add_common(bounds);

  auto* weil = app.add_subcommand("weil", "sample the character-sum oracle");
  weil->add_option("--q", q)->required();
  weil->add_option("--s", s);
  weil->add_option("--samples", samples);
  weil->add_option("--seed", seed);
  add_common(weil);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*field) return cmd_field(q, common, out);
    if (*perm) return cmd_perm(q, *g1, *g2, common, out);
    if (*verify) return cmd_verify(path, common, out);
    if (*fmax) return cmd_family_max(q, family, delta, g2, format, timing, common, out);
    if (*survey) return cmd_survey(qmin, qmax, family, delta, timing, common, out, err);
    if (*count) return cmd_count(count_mode, q, B, g1, g2, r, s, S, u, v, common, out);
    if (*bounds) return cmd_bounds(q, *r, *s, mode, exact, common, out);
    if (*weil) return cmd_weil(q, s, samples, seed, common, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"costas-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace costas::cli
