#pragma once

// Command-line front end. `run` is kept separate from main() so the tests can
// drive it with in-memory streams.
//
// Exit codes: 0 success (including empty solution sets), 1 unexpected error,
// 2 usage or validation error, 3 factorization cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mdioph.hpp"

namespace mdioph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

enum class Format { text, json, csv };

struct InstanceArgs {
  std::optional<Exponent> p, q;
  std::optional<std::string> mp, mq;
  std::string l;
};

struct CliConfig {
  std::string command;
  InstanceArgs inst;
  SearchBounds bounds;
  std::optional<std::string> z_max;
  Exponent x = 0, y = 0;
  std::string z;
  bool positive_only = false;
  Format format = Format::text;
  std::optional<std::string> out_path;
  Exponent p_limit = 7;
  unsigned threads = 0;
};

namespace detail {

inline MersennePrime resolve_mersenne(const std::optional<Exponent>& exp, const std::optional<std::string>& value,
                                      const char* name) {
  if (exp && value) throw std::invalid_argument(std::string("give either --") + name + " or --m" + name + ", not both");
  if (exp) return MersennePrime::from_exponent(*exp);
  if (value) return MersennePrime::from_value(parse_bigint(*value));
  throw std::invalid_argument(std::string("missing --") + name + " (or --m" + name + ")");
}

inline EquationInstance resolve_instance(const InstanceArgs& a) {
  auto mp = resolve_mersenne(a.p, a.mp, "p");
  auto mq = resolve_mersenne(a.q, a.mq, "q");
  return {std::move(mp), std::move(mq), parse_bigint(a.l)};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void emit(const CliConfig& cfg, const std::string& payload, std::ostream& out) {
  if (!cfg.out_path) {
    out << payload;
    return;
  }
  std::ofstream f(*cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + *cfg.out_path + " for writing");
  f << payload;
}

inline std::string render(const SolutionSet& set, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::text: write_text(os, set); break;
    case Format::json: os << dump(to_json(set)); break;
    case Format::csv: write_csv(os, set); break;
  }
  return os.str();
}

inline std::string render(const std::vector<CatalogRow>& rows, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::text: write_text(os, rows); break;
    case Format::json: os << dump(to_json(rows)); break;
    case Format::csv: write_csv(os, rows); break;
  }
  return os.str();
}

inline const char* extension(Format fmt) {
  switch (fmt) {
    case Format::text: return "txt";
    case Format::json: return "json";
    case Format::csv: return "csv";
  }
  return "txt";
}

inline unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline int cmd_solve(const CliConfig& cfg, std::ostream& out) {
  const auto inst = resolve_instance(cfg.inst);
  emit(cfg, render(classify(inst, cfg.positive_only), cfg.format), out);
  return kExitOk;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const auto inst = resolve_instance(cfg.inst);
  const BigInt z = parse_bigint(cfg.z);
  const bool holds = verify(inst, cfg.x, cfg.y, z);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::text:
      os << "equation: " << equation_text(inst) << "\n"
         << "(x, y, z) = (" << cfg.x << ", " << cfg.y << ", " << z << ")\n"
         << "holds: " << (holds ? "true" : "false") << "\n";
      break;
    case Format::json: {
      Json j;
      j["instance"] = instance_to_json(inst);
      j["x"] = cfg.x;
      j["y"] = cfg.y;
      j["z"] = z.str();
      j["holds"] = holds;
      os << dump(j);
      break;
    }
    case Format::csv:
      os << "x,y,z,holds\n" << cfg.x << "," << cfg.y << "," << z << "," << (holds ? "true" : "false") << "\n";
      break;
  }
  emit(cfg, os.str(), out);
  return kExitOk;
}

inline int cmd_search(const CliConfig& cfg, std::ostream& out) {
  const auto inst = resolve_instance(cfg.inst);
  SearchBounds bounds = cfg.bounds;
  if (cfg.z_max) bounds.z_max = parse_bigint(*cfg.z_max);
  emit(cfg, render(brute_force(inst, bounds, worker_count(cfg.threads)), cfg.format), out);
  return kExitOk;
}

inline int cmd_tables(const CliConfig& cfg, std::ostream& out) {
  const auto t1 = table1(cfg.p_limit);
  const auto t2 = table2();
  if (cfg.out_path) {
    // --out names a directory: table1_p<limit>.<ext> and table2.<ext>.
    const std::filesystem::path dir(*cfg.out_path);
    std::filesystem::create_directories(dir);
    const std::string ext = extension(cfg.format);
    const std::pair<std::filesystem::path, std::string> files[] = {
        {dir / ("table1_p" + std::to_string(cfg.p_limit) + "." + ext), render(t1, cfg.format)},
        {dir / ("table2." + ext), render(t2, cfg.format)},
    };
    for (const auto& [path, payload] : files) {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
      f << payload;
      out << "wrote " << path.string() << "\n";
    }
    return kExitOk;
  }
  switch (cfg.format) {
    case Format::text:
      out << "Table 1: solvable instances, p <= " << cfg.p_limit << "\n" << render(t1, cfg.format);
      out << "\nTable 2: unsolvable instances\n" << render(t2, cfg.format);
      break;
    case Format::json: {
      Json j;
      j["table1"] = to_json(t1);
      j["table2"] = to_json(t2);
      out << dump(j);
      break;
    }
    case Format::csv:
      out << render(t1, cfg.format) << "\n" << render(t2, cfg.format);
      break;
  }
  return kExitOk;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : sep) + s;
  return out;
}

inline int cmd_mersenne(const CliConfig& cfg, std::ostream& out) {
  Json arr = Json::array();
  std::ostringstream text, csv;
  csv << "p,mp,mp_mod4,two_p_plus_1,factors,admissible_q,admissible_l\n";
  for (Exponent p : mersenne_exponents(cfg.p_limit)) {
    const auto mp = MersennePrime::from_exponent(p);
    const BigInt two_p_plus_1 = pow2(p) + 1;
    const auto fact = factor(two_p_plus_1);
    std::vector<std::string> factors, qs, ls;
    for (const auto& f : fact.factors)
      factors.push_back(f.prime.str() + (f.multiplicity > 1 ? "^" + std::to_string(f.multiplicity) : ""));
    for (Exponent q : admissible_q(mp)) qs.push_back(std::to_string(q));
    for (const auto& l : admissible_l(mp)) ls.push_back(l.str());

    Json j;
    j["p"] = p;
    j["mp"] = mp.value().str();
    j["mp_mod4"] = mod4_residue(mp.value());
    j["two_p_plus_1"] = two_p_plus_1.str();
    j["factors"] = factors;
    j["admissible_q"] = Json::array();
    for (Exponent q : admissible_q(mp)) j["admissible_q"].push_back(q);
    j["admissible_l"] = ls;
    arr.push_back(j);

    text << "p=" << p << " M_p=" << mp.value() << " (mod 4 = " << mod4_residue(mp.value()) << ")  2^p+1="
         << two_p_plus_1 << " = " << join(factors, " * ") << "  q: {" << join(qs, ", ") << "}  l: {"
         << join(ls, ", ") << "}\n";
    csv << p << "," << mp.value() << "," << mod4_residue(mp.value()) << "," << two_p_plus_1 << ","
        << join(factors, ";") << "," << join(qs, ";") << "," << join(ls, ";") << "\n";
  }
  switch (cfg.format) {
    case Format::text: emit(cfg, text.str(), out); break;
    case Format::json: emit(cfg, dump(arr), out); break;
    case Format::csv: emit(cfg, csv.str(), out); break;
  }
  return kExitOk;
}

inline void add_instance_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--p", cfg.inst.p, "Mersenne exponent p (M_p = 2^p - 1)");
  sub->add_option("--q", cfg.inst.q, "Mersenne exponent q (M_q = 2^q - 1)");
  sub->add_option("--mp", cfg.inst.mp, "M_p given as a value; the exponent is recovered");
  sub->add_option("--mq", cfg.inst.mq, "M_q given as a value; the exponent is recovered");
  sub->add_option("--l", cfg.inst.l, "prime l")->required();
}

inline void add_output_flags(CLI::App* sub, CliConfig& cfg) {
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  sub->add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats));
  sub->add_option("--out", cfg.out_path, "write the report to PATH instead of stdout");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CliConfig cfg;
  CLI::App app{"Solver for M_p^x + (M_q + 1)^y = (l z)^2 over Mersenne primes M_p, M_q and prime l"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "closed-form solution set of one instance");
  detail::add_instance_flags(solve, cfg);
  solve->add_flag("--positive-only", cfg.positive_only, "drop solutions with a zero component");
  detail::add_output_flags(solve, cfg);

  auto* ver = app.add_subcommand("verify", "check one (x, y, z) exactly");
  detail::add_instance_flags(ver, cfg);
  ver->add_option("--x", cfg.x)->required();
  ver->add_option("--y", cfg.y)->required();
  ver->add_option("--z", cfg.z)->required();
  detail::add_output_flags(ver, cfg);

  auto* search = app.add_subcommand("search", "bounded brute-force enumeration");
  detail::add_instance_flags(search, cfg);
  search->add_option("--x-max", cfg.bounds.x_max, "largest x tried")->capture_default_str();
  search->add_option("--y-max", cfg.bounds.y_max, "largest y tried")->capture_default_str();
  search->add_option("--z-max", cfg.z_max, "largest z accepted (default: no cap)");
  search->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
  detail::add_output_flags(search, cfg);

  auto* tables = app.add_subcommand("tables", "solvable catalog up to --p-limit and the unsolvable table");
  tables->add_option("--p-limit", cfg.p_limit, "largest Mersenne exponent p")->capture_default_str();
  detail::add_output_flags(tables, cfg);

  auto* mers = app.add_subcommand("mersenne", "Mersenne exponents up to --p-limit with admissible q and l");
  mers->add_option("--p-limit", cfg.p_limit, "largest exponent p")->capture_default_str();
  detail::add_output_flags(mers, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (solve->parsed()) return detail::cmd_solve(cfg, out);
    if (ver->parsed()) return detail::cmd_verify(cfg, out);
    if (search->parsed()) return detail::cmd_search(cfg, out);
    if (tables->parsed()) {
      if (cfg.p_limit < 2) throw std::invalid_argument("--p-limit must be >= 2");
      return detail::cmd_tables(cfg, out);
    }
    if (mers->parsed()) return detail::cmd_mersenne(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace mdioph::cli
