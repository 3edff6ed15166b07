#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "patdual/decimal.hpp"
#include "patdual/duel.hpp"
#include "patdual/equilibrium.hpp"
#include "patdual/errors.hpp"
#include "patdual/simulate.hpp"
#include "patdual/sweep.hpp"

namespace patdual::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson, kCsv };

struct RunConfig {
  std::string command;
  std::string alphabet_text = "H:1/2,T:1/2";
  std::vector<std::string> pattern_args;
  std::optional<std::size_t> n;
  int digits = 4;
  Format format = Format::kTable;
  std::string method = "pgf";
  std::uint64_t games = 100000;
  std::uint64_t seed = 1;
  std::size_t length = 0;
};

struct Report {
  Json results;
  std::string table;
  std::string csv;
  int code = kOk;
};

class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

Json exact_json(const Rat& r, int digits) { return Json{{"exact", r.str()}, {"decimal", format_decimal(r, digits)}}; }

Json prob_json(const Rat& r, int digits) {
  return Json{{"exact", r.str()}, {"decimal", format_decimal(r, digits)}, {"percent", format_percent(r, digits)}};
}

Json poly_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

Json rf_json(const RationalFunction& f) { return Json{{"numerator", poly_json(f.num())}, {"denominator", poly_json(f.den())}}; }

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

Json std_json(const Rat& variance, int digits) { return Json{{"decimal", format_sqrt(variance, digits)}}; }

Json skewness_json(const Moments& m, int digits) {
  if (m.variance.is_zero()) return Json{{"decimal", nullptr}};
  const Rat squared = m.third_central * m.third_central / (m.variance * m.variance * m.variance);
  return Json{{"decimal", format_sqrt(squared, digits, m.third_central.sign() < 0)}};
}

std::shared_ptr<const Alphabet> load_alphabet(const RunConfig& cfg) {
  return std::make_shared<const Alphabet>(Alphabet::parse(cfg.alphabet_text));
}

// Values are split on ';'; with single-character labels also on ','.
std::vector<Pattern> load_patterns(const RunConfig& cfg, const std::shared_ptr<const Alphabet>& alphabet) {
  std::vector<Pattern> out;
  const bool comma_separates = alphabet->single_char_labels();
  for (const auto& arg : cfg.pattern_args) {
    std::string item;
    std::istringstream in(arg);
    while (std::getline(in, item, ';')) {
      if (comma_separates) {
        std::istringstream inner(item);
        std::string piece;
        while (std::getline(inner, piece, ',')) {
          if (!piece.empty()) out.push_back(Pattern::parse(piece, alphabet));
        }
      } else if (!item.empty()) {
        out.push_back(Pattern::parse(item, alphabet));
      }
    }
  }
  if (out.empty()) throw ParseError("no patterns given (use --patterns)");
  return out;
}

void require_count(const std::vector<Pattern>& pats, std::size_t lo, std::size_t hi, const std::string& cmd) {
  if (pats.size() < lo || pats.size() > hi) {
    throw PreconditionError(cmd + ": expected " + (lo == hi ? "exactly " + std::to_string(lo) : "at least " + std::to_string(lo)) +
                            " pattern(s), got " + std::to_string(pats.size()));
  }
}

std::string column(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size(), ' ');
}

Report first_passage(const RunConfig& cfg) {
  const auto alphabet = load_alphabet(cfg);
  const auto pats = load_patterns(cfg, alphabet);
  require_count(pats, 1, 1, "first-passage");
  const Pattern& s = pats[0];
  const Pgf f = first_passage_pgf(s);
  const Moments m = f.moments();
  const std::size_t n = cfg.n.value_or(default_series_length(m.mean));
  const SeriesPrefix c = f.coefficients(n);

  Report r;
  r.results["pattern"] = s.str();
  r.results["string_probability"] = exact_json(string_probability(s.symbols(), s.alphabet()), cfg.digits);
  r.results["pgf"] = rf_json(f.rf());
  r.results["mean"] = exact_json(m.mean, cfg.digits);
  r.results["variance"] = exact_json(m.variance, cfg.digits);
  r.results["std"] = std_json(m.variance, cfg.digits);
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    coeffs.push_back(Json{{"n", i}, {"exact", c[i].str()}, {"decimal", format_decimal(c[i], cfg.digits)}});
  }
  r.results["coefficients"] = std::move(coeffs);

  std::ostringstream t;
  t << "pattern      " << s.str() << "\n";
  t << "F(z)         " << f.rf().str() << "\n";
  t << "mean         " << format_decimal(m.mean, cfg.digits) << "  (" << m.mean.str() << ")\n";
  t << "variance     " << format_decimal(m.variance, cfg.digits) << "  (" << m.variance.str() << ")\n";
  t << "std          " << format_sqrt(m.variance, cfg.digits) << "\n\n";
  t << column("n", 8) << column("f_n", 16) << "exact\n";
  std::ostringstream csv;
  csv << "n,exact,decimal\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    t << column(std::to_string(i), 8) << column(format_decimal(c[i], cfg.digits), 16) << c[i].str() << "\n";
    csv << i << "," << c[i].str() << "," << format_decimal(c[i], cfg.digits) << "\n";
  }
  r.table = t.str();
  r.csv = csv.str();
  return r;
}

Report duel(const RunConfig& cfg) {
  const auto alphabet = load_alphabet(cfg);
  const PatternSet ps = validate_pattern_set(load_patterns(cfg, alphabet));
  require_count(ps.patterns(), 2, SIZE_MAX, "duel");
  if (cfg.method != "pgf" && cfg.method != "equilibrium" && cfg.method != "both") {
    throw ParseError("--method must be pgf, equilibrium or both");
  }
  const bool use_pgf = cfg.method != "equilibrium";
  const bool use_eq = cfg.method != "pgf";
  const int d = cfg.digits;

  std::optional<DuelSolution> sol;
  std::optional<EquilibriumSolution> eq;
  if (use_pgf) sol = solve_duel(ps);
  if (use_eq) eq = solve_equilibrium(ps);
  const std::vector<Rat>& wins = sol ? sol->win_probs : eq->win_probs;
  const Rat& mean = sol ? sol->duration_moments.mean : eq->expected_duration;

  Report r;
  r.results["method"] = cfg.method;
  Json pats = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) pats.push_back(Json{{"pattern", ps[i].str()}, {"win_probability", prob_json(wins[i], d)}});
  r.results["patterns"] = std::move(pats);

  Json duration;
  duration["mean"] = exact_json(mean, d);
  if (sol) {
    const Moments& m = sol->duration_moments;
    duration["variance"] = exact_json(m.variance, d);
    duration["std"] = std_json(m.variance, d);
    duration["third_central_moment"] = exact_json(m.third_central, d);
    duration["skewness"] = skewness_json(m, d);
    duration["pgf"] = rf_json(sol->duration.rf());
  }
  r.results["duration"] = std::move(duration);

  if (eq) {
    Json y = Json::array();
    for (const auto& v : eq->y) y.push_back(exact_json(v, d));
    r.results["equilibrium"] = Json{{"y", std::move(y)}};
  }

  bool agree = true;
  if (sol && eq) {
    agree = sol->win_probs == eq->win_probs && sol->duration_moments.mean == eq->expected_duration;
    r.results["cross_check"] = Json{{"agree", agree}};
  }

  std::ostringstream csv;
  if (sol && cfg.n) {
    const SeriesPrefix dur = duration_coefficients(*sol, *cfg.n);
    std::vector<SeriesPrefix> xs;
    for (std::size_t i = 0; i < ps.size(); ++i) xs.push_back(win_prob_series(*sol, i, *cfg.n));
    Json coeffs = Json::array();
    csv << "n,duration_exact,duration_decimal";
    for (std::size_t i = 0; i < ps.size(); ++i) csv << "," << ps[i].str() << "_exact," << ps[i].str() << "_decimal";
    csv << "\n";
    for (std::size_t k = 0; k <= *cfg.n; ++k) {
      Json w = Json::array();
      csv << k << "," << dur[k].str() << "," << format_decimal(dur[k], d);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        w.push_back(exact_json(xs[i][k], d));
        csv << "," << xs[i][k].str() << "," << format_decimal(xs[i][k], d);
      }
      csv << "\n";
      coeffs.push_back(Json{{"n", k}, {"duration", exact_json(dur[k], d)}, {"wins", std::move(w)}});
    }
    r.results["coefficients"] = std::move(coeffs);
  } else {
    csv << "pattern,win_exact,win_decimal\n";
    for (std::size_t i = 0; i < ps.size(); ++i) csv << ps[i].str() << "," << wins[i].str() << "," << format_decimal(wins[i], d) << "\n";
  }
  r.csv = csv.str();

  std::size_t width = 10;
  for (const auto& p : ps.patterns()) width = std::max(width, p.str().size() + 3);
  std::ostringstream t;
  t << "method       " << cfg.method << "\n\n";
  t << column("pattern", width) << column("win", 12) << "exact\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    t << column(ps[i].str(), width) << column(format_percent(wins[i], d), 12) << wins[i].str() << "\n";
  }
  t << "\nmean duration  " << format_decimal(mean, d) << "  (" << mean.str() << ")\n";
  if (sol) {
    const Moments& m = sol->duration_moments;
    t << "std deviation  " << format_sqrt(m.variance, d) << "\n";
    const Json sk = skewness_json(m, d);
    t << "skewness       " << (sk["decimal"].is_null() ? std::string("undefined") : sk["decimal"].get<std::string>()) << "\n";
  }
  if (sol && eq) t << "cross-check    " << (agree ? "pgf and equilibrium agree" : "MISMATCH") << "\n";
  if (sol && cfg.n) {
    t << "\n" << column("n", 8) << "P(duration = n)\n";
    const SeriesPrefix dur = duration_coefficients(*sol, *cfg.n);
    for (std::size_t k = 0; k < dur.size(); ++k) t << column(std::to_string(k), 8) << format_decimal(dur[k], d) << "  " << dur[k].str() << "\n";
  }
  r.table = t.str();
  if (!agree) r.code = kCrossCheckFailed;
  return r;
}

Report simulate_cmd(const RunConfig& cfg) {
  const auto alphabet = load_alphabet(cfg);
  const PatternSet ps = validate_pattern_set(load_patterns(cfg, alphabet));
  require_count(ps.patterns(), 2, SIZE_MAX, "simulate");
  const SimReport sim = simulate(ps, cfg.games, cfg.seed);
  const DuelSolution exact = solve_duel(ps);
  const int d = cfg.digits;
  const double games = static_cast<double>(sim.games);

  Report r;
  r.results["games"] = sim.games;
  r.results["seed"] = sim.seed;
  Json pats = Json::array();
  std::ostringstream t, csv;
  std::size_t width = 10;
  for (const auto& p : ps.patterns()) width = std::max(width, p.str().size() + 3);
  t << "games " << sim.games << ", seed " << sim.seed << "\n\n";
  t << column("pattern", width) << column("wins", 12) << column("empirical", 12) << column("exact", 12) << "z\n";
  csv << "pattern,wins,empirical,exact,z_score\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double p = exact.win_probs[i].to_double();
    const double se = std::sqrt(p * (1 - p) / games);
    const double z = se > 0 ? (sim.win_frequency(i) - p) / se : 0.0;
    pats.push_back(Json{{"pattern", ps[i].str()},
                        {"wins", sim.wins[i]},
                        {"empirical", fixed(sim.win_frequency(i), d)},
                        {"exact", prob_json(exact.win_probs[i], d)},
                        {"z_score", fixed(z, 2)}});
    t << column(ps[i].str(), width) << column(std::to_string(sim.wins[i]), 12) << column(fixed(sim.win_frequency(i), d), 12)
      << column(format_decimal(exact.win_probs[i], d), 12) << fixed(z, 2) << "\n";
    csv << ps[i].str() << "," << sim.wins[i] << "," << fixed(sim.win_frequency(i), d) << "," << exact.win_probs[i].str() << ","
        << fixed(z, 2) << "\n";
  }
  r.results["patterns"] = std::move(pats);

  const Moments& m = exact.duration_moments;
  const double sd = std::sqrt(m.variance.to_double());
  const double zm = sd > 0 ? (sim.mean_duration() - m.mean.to_double()) / (sd / std::sqrt(games)) : 0.0;
  r.results["duration"] = Json{{"empirical_mean", fixed(sim.mean_duration(), d)}, {"exact_mean", exact_json(m.mean, d)}, {"z_score", fixed(zm, 2)}};
  t << "\nmean duration  empirical " << fixed(sim.mean_duration(), d) << "  exact " << format_decimal(m.mean, d) << "  z "
    << fixed(zm, 2) << "\n";
  r.table = t.str();
  r.csv = csv.str();
  return r;
}

Report best_response_cmd(const RunConfig& cfg) {
  const auto alphabet = load_alphabet(cfg);
  const auto pats = load_patterns(cfg, alphabet);
  require_count(pats, 1, 1, "best-response");
  if (cfg.length == 0) throw PreconditionError("best-response: --length must be at least 1");
  const auto ranked = best_response(pats[0], cfg.length);
  const int d = cfg.digits;

  Report r;
  r.results["opponent"] = pats[0].str();
  r.results["length"] = cfg.length;
  Json cands = Json::array(), skipped = Json::array();
  std::ostringstream t, csv;
  const std::size_t width = std::max<std::size_t>(10, pats[0].str().size() + 3);
  t << "opponent " << pats[0].str() << ", response length " << cfg.length << "\n\n";
  t << column("rank", 6) << column("response", width) << column("win", 12) << "exact\n";
  csv << "rank,response,win_exact,win_decimal,status\n";
  std::size_t rank = 0;
  for (const auto& c : ranked) {
    if (c.win_prob) {
      ++rank;
      cands.push_back(Json{{"rank", rank}, {"response", c.response.str()}, {"win_probability", prob_json(*c.win_prob, d)}});
      t << column(std::to_string(rank), 6) << column(c.response.str(), width) << column(format_percent(*c.win_prob, d), 12)
        << c.win_prob->str() << "\n";
      csv << rank << "," << c.response.str() << "," << c.win_prob->str() << "," << format_decimal(*c.win_prob, d) << ",ok\n";
    } else {
      skipped.push_back(Json{{"response", c.response.str()}, {"reason", c.skipped_reason}});
      csv << "," << c.response.str() << ",,,skipped\n";
    }
  }
  if (!skipped.empty()) {
    t << "\nskipped:\n";
    for (const auto& s : skipped) t << "  " << s["response"].get<std::string>() << ": " << s["reason"].get<std::string>() << "\n";
  }
  r.results["candidates"] = std::move(cands);
  r.results["skipped"] = std::move(skipped);
  r.table = t.str();
  r.csv = csv.str();
  return r;
}

void emit(const RunConfig& cfg, const Report& rep, std::ostream& out) {
  switch (cfg.format) {
    case Format::kJson: {
      const auto alphabet = load_alphabet(cfg);
      Json doc;
      doc["command"] = cfg.command;
      Json alpha = Json::array();
      for (std::size_t i = 0; i < alphabet->size(); ++i) {
        alpha.push_back(Json{{"symbol", alphabet->label(static_cast<int>(i))}, {"probability", alphabet->prob(static_cast<int>(i)).str()}});
      }
      doc["alphabet"] = std::move(alpha);
      Json pats = Json::array();
      for (const auto& p : load_patterns(cfg, alphabet)) pats.push_back(p.str());
      doc["patterns"] = std::move(pats);
      doc["results"] = rep.results;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << rep.csv;
      break;
    case Format::kTable:
      out << "alphabet     " << cfg.alphabet_text << "\n" << rep.table;
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact win probabilities and durations for pattern races"};
  app.name("patdual");
  app.require_subcommand(1);

  std::string format = "table";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alphabet", cfg.alphabet_text, "Symbols with exact probabilities, e.g. H:1/2,T:1/2");
    sub->add_option("--patterns", cfg.pattern_args, "Patterns separated by ',' (single-character labels) or ';'")->required();
    sub->add_option("--digits", cfg.digits, "Decimal digits in rendered output")->check(CLI::Range(0, 200));
    sub->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>("--n", [&](const std::size_t& v) { cfg.n = v; }, "Series length (highest power of z)");
  };

  CLI::App* fp = app.add_subcommand("first-passage", "Distribution of the first completion time of one pattern");
  add_common(fp);
  add_n(fp);
  CLI::App* du = app.add_subcommand("duel", "Race two or more patterns");
  add_common(du);
  add_n(du);
  du->add_option("--method", cfg.method, "pgf, equilibrium or both")->check(CLI::IsMember({"pgf", "equilibrium", "both"}));
  CLI::App* si = app.add_subcommand("simulate", "Monte Carlo estimate alongside the exact answer");
  add_common(si);
  si->add_option("--games", cfg.games, "Number of games")->check(CLI::PositiveNumber);
  si->add_option("--seed", cfg.seed, "64-bit seed");
  CLI::App* br = app.add_subcommand("best-response", "Rank all responses of a given length against one pattern");
  add_common(br);
  br->add_option("--length", cfg.length, "Response length")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  cfg.format = format == "json" ? Format::kJson : (format == "csv" ? Format::kCsv : Format::kTable);

  try {
    Report rep;
    if (fp->parsed()) {
      cfg.command = "first-passage";
      rep = first_passage(cfg);
    } else if (du->parsed()) {
      cfg.command = "duel";
      rep = duel(cfg);
    } else if (si->parsed()) {
      cfg.command = "simulate";
      rep = simulate_cmd(cfg);
    } else {
      cfg.command = "best-response";
      rep = best_response_cmd(cfg);
    }
    emit(cfg, rep, out);
    if (rep.code == kCrossCheckFailed) err << "error: pgf and equilibrium results disagree\n";
    return rep.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace patdual::cli
