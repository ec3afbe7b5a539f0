#include "tfde/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "tfde/errors.hpp"

namespace tfde {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, "key '" + key + "': expected a number, got '" + text + "'");
  }
}

std::size_t parse_size(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] == '-') throw std::invalid_argument(text);
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError(key, "key '" + key + "': expected a non-negative integer, got '" +
                               text + "'");
  }
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "a",   "b",     "T",       "N",    "M",    "beta",   "lambda",  "gamma1",
      "coefficient", "preconditioner", "l", "tol", "maxit", "restart", "side",
      "source", "initial"};
  return keys;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

// Applies every scalar key of cfg except those listed in skip.
void apply_scalar_keys(const KeyValueConfig& cfg, BenchmarkCase& c,
                       const std::set<std::string>& skip) {
  for (const auto& [key, value] : cfg.entries) {
    if (skip.count(key)) continue;
    if (key == "a") c.a = parse_double(key, value);
    else if (key == "b") c.b = parse_double(key, value);
    else if (key == "T") c.T = parse_double(key, value);
    else if (key == "N") c.N = parse_size(key, value);
    else if (key == "M") c.M = parse_size(key, value);
    else if (key == "beta") c.beta = parse_double(key, value);
    else if (key == "lambda") c.lambda = parse_double(key, value);
    else if (key == "gamma1") c.gamma1 = parse_double(key, value);
    else if (key == "coefficient") c.coefficient = value;
    else if (key == "preconditioner") {
      try {
        c.preconditioner = parse_preconditioner(value);
      } catch (const DomainError& e) {
        throw ConfigError(key, "key 'preconditioner': " + std::string(e.what()));
      }
    } else if (key == "l") c.l = parse_size(key, value);
    else if (key == "tol") c.tol = parse_double(key, value);
    else if (key == "maxit") c.maxit = parse_size(key, value);
    else if (key == "restart") c.restart = parse_size(key, value);
    else if (key == "side") {
      if (value == "left") c.side = PreconditionSide::Left;
      else if (value == "right") c.side = PreconditionSide::Right;
      else throw ConfigError(key, "key 'side': expected left or right, got '" + value + "'");
    } else if (key == "source") c.source = value;
    else if (key == "initial") c.initial = value;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

const std::string* KeyValueConfig::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

KeyValueConfig parse_key_value(std::istream& is) {
  KeyValueConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "line " + std::to_string(lineno) + ": '" + line +
                                  "' is not a key = value pair");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("", "line " + std::to_string(lineno) + ": empty key");
    if (!known_keys().count(key))
      throw ConfigError(key, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (value.empty())
      throw ConfigError(key, "line " + std::to_string(lineno) + ": key '" + key +
                                 "' has no value");
    if (cfg.find(key))
      throw ConfigError(key, "line " + std::to_string(lineno) + ": key '" + key +
                                 "' given twice");
    cfg.entries.emplace_back(key, value);
  }
  return cfg;
}

KeyValueConfig load_key_value(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("--config", "cannot open config file '" + path + "'");
  return parse_key_value(is);
}

std::string to_string(PreconditionerKind kind) {
  switch (kind) {
    case PreconditionerKind::Tai: return "tai";
    case PreconditionerKind::Cai: return "cai";
    case PreconditionerKind::None: return "none";
    case PreconditionerKind::P2Ref: return "p2-ref";
  }
  return "?";
}

PreconditionerKind parse_preconditioner(const std::string& name) {
  if (name == "tai") return PreconditionerKind::Tai;
  if (name == "cai") return PreconditionerKind::Cai;
  if (name == "none") return PreconditionerKind::None;
  if (name == "p2-ref") return PreconditionerKind::P2Ref;
  throw DomainError("unknown preconditioner '" + name + "' (tai, cai, none, p2-ref)");
}

// ---------------------------------------------------------------------------
// BenchmarkCase

std::size_t BenchmarkCase::interpolation_points() const {
  if (l) return *l;
  return coefficient == "d2" ? 12 : 8;
}

void BenchmarkCase::validate() const {
  if (coefficient != "d1" && coefficient != "d2" && coefficient != "zero") {
    if (!is_number(coefficient) || std::strtod(coefficient.c_str(), nullptr) < 0.0)
      throw ConfigError("coefficient", "key 'coefficient': expected d1, d2, zero or a "
                                       "non-negative constant, got '" + coefficient + "'");
  }
  if (N < 2) throw ConfigError("N", "key 'N': must be at least 2");
  if (M && *M < 1) throw ConfigError("M", "key 'M': must be at least 1");
  if (!(b > a)) throw ConfigError("b", "key 'b': must exceed a");
  if (!(T > 0.0)) throw ConfigError("T", "key 'T': must be positive");
  if (!(beta > 1.0 && beta < 2.0)) throw ConfigError("beta", "key 'beta': must lie in (1,2)");
  if (!(lambda >= 0.0)) throw ConfigError("lambda", "key 'lambda': must be non-negative");
  if (!(tol > 0.0)) throw ConfigError("tol", "key 'tol': must be positive");
  if (maxit < 1) throw ConfigError("maxit", "key 'maxit': must be at least 1");
  if (restart && *restart < 1) throw ConfigError("restart", "key 'restart': must be at least 1");
  if (source != "manufactured" && source != "zero")
    throw ConfigError("source", "key 'source': expected manufactured or zero, got '" +
                                    source + "'");
  if (initial != "zero" && initial != "profile")
    throw ConfigError("initial", "key 'initial': expected zero or profile, got '" +
                                     initial + "'");
  if (source == "manufactured" && (a != 0.0 || b != 1.0))
    throw ConfigError(a != 0.0 ? "a" : "b",
                      "the manufactured source is defined on [0,1] only");
  if (preconditioner == PreconditionerKind::Tai || preconditioner == PreconditionerKind::Cai) {
    const std::size_t lp = interpolation_points();
    if (lp < 2 || lp > N)
      throw ConfigError("l", "key 'l': must satisfy 2 <= l <= N");
  }
}

NamedField BenchmarkCase::coefficient_field() const {
  if (coefficient == "d1" || coefficient == "d2" || coefficient == "zero")
    return named_coefficient(coefficient);
  return constant_coefficient(std::strtod(coefficient.c_str(), nullptr));
}

ProblemConfig BenchmarkCase::problem() const {
  validate();
  ProblemConfig cfg;
  if (source == "manufactured") {
    cfg = manufactured_problem(N, coefficient_field(), beta, lambda, gamma1);
  } else {
    cfg.diffusion = coefficient_field();
    cfg.source = {"zero", [](double, double) { return 0.0; }};
    cfg.N = N;
    cfg.beta = beta;
    cfg.lambda = lambda;
    cfg.gamma1 = gamma1;
  }
  cfg.a = a;
  cfg.b = b;
  cfg.T_final = T;
  cfg.M = time_steps();
  if (initial == "profile") {
    const double lam = lambda;
    cfg.initial = {"profile", [lam](double x) { return exact_solution(x, 1.0, lam); }};
  } else {
    cfg.initial = {"zero", [](double) { return 0.0; }};
  }
  return cfg;
}

GmresConfig BenchmarkCase::gmres_config() const {
  GmresConfig g;
  g.tol = tol;
  g.maxit = maxit;
  g.restart = restart;
  g.side = side;
  return g;
}

std::string BenchmarkCase::canonical() const {
  std::ostringstream os;
  os << "coefficient=" << coefficient << ";N=" << N << ";M=" << time_steps()
     << ";preconditioner=" << to_string(preconditioner) << ";l=" << interpolation_points()
     << ";a=" << format_double(a) << ";b=" << format_double(b) << ";T=" << format_double(T)
     << ";beta=" << format_double(beta) << ";lambda=" << format_double(lambda)
     << ";gamma1=" << format_double(gamma1) << ";tol=" << format_double(tol)
     << ";maxit=" << maxit << ";restart=" << (restart ? std::to_string(*restart) : "none")
     << ";side=" << (side == PreconditionSide::Left ? "left" : "right")
     << ";source=" << source << ";initial=" << initial;
  return os.str();
}

std::string BenchmarkCase::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

bool BenchmarkCase::has_reference_solution() const {
  if (source == "manufactured") return initial == "zero";
  if (initial == "zero") return true;
  return coefficient == "zero" || (is_number(coefficient) &&
                                   std::strtod(coefficient.c_str(), nullptr) == 0.0);
}

double BenchmarkCase::reference_solution(double x) const {
  if (source == "manufactured") return exact_solution(x, T, lambda);
  if (initial == "zero") return 0.0;
  return exact_solution(x, 1.0, lambda);
}

// ---------------------------------------------------------------------------

std::vector<BenchmarkCase> parse_cases(const KeyValueConfig& cfg) {
  BenchmarkCase base;
  apply_scalar_keys(cfg, base, {"N", "coefficient", "preconditioner"});

  const auto list_or = [&](const char* key, std::string fallback) {
    const auto* v = cfg.find(key);
    return split_list(v ? *v : fallback);
  };
  const auto coefficients = list_or("coefficient", base.coefficient);
  const auto preconditioners = list_or("preconditioner", to_string(base.preconditioner));
  const auto Ns = list_or("N", std::to_string(base.N));

  std::vector<BenchmarkCase> cases;
  for (const auto& coef : coefficients) {
    for (const auto& pc : preconditioners) {
      for (const auto& n : Ns) {
        BenchmarkCase c = base;
        c.coefficient = coef;
        try {
          c.preconditioner = parse_preconditioner(pc);
        } catch (const DomainError& e) {
          throw ConfigError("preconditioner", "key 'preconditioner': " + std::string(e.what()));
        }
        c.N = parse_size("N", n);
        c.validate();
        cases.push_back(std::move(c));
      }
    }
  }
  return cases;
}

BenchmarkCase parse_case(const KeyValueConfig& cfg) {
  for (const char* key : {"N", "coefficient", "preconditioner"}) {
    if (const auto* v = cfg.find(key); v && v->find(',') != std::string::npos)
      throw ConfigError(key, std::string("key '") + key + "': a single value is required");
  }
  BenchmarkCase c;
  apply_scalar_keys(cfg, c, {});
  c.validate();
  return c;
}

std::pair<BenchmarkCase, std::vector<std::size_t>> parse_order_study(
    const KeyValueConfig& cfg) {
  BenchmarkCase c;
  apply_scalar_keys(cfg, c, {"N"});
  for (const char* key : {"coefficient", "preconditioner"}) {
    if (const auto* v = cfg.find(key); v && v->find(',') != std::string::npos)
      throw ConfigError(key, std::string("key '") + key + "': a single value is required");
  }
  std::vector<std::size_t> Ns;
  if (const auto* v = cfg.find("N")) {
    for (const auto& item : split_list(*v)) Ns.push_back(parse_size("N", item));
  } else {
    Ns = {32, 64, 128, 256};
  }
  if (Ns.empty()) throw ConfigError("N", "key 'N': empty list");
  for (std::size_t i = 1; i < Ns.size(); ++i) {
    if (Ns[i] <= Ns[i - 1])
      throw ConfigError("N", "key 'N': the list must be strictly increasing");
  }
  if (cfg.find("M"))
    throw ConfigError("M", "key 'M': the order study fixes M = N + 1");
  for (std::size_t n : Ns) {
    BenchmarkCase probe = c;
    probe.N = n;
    probe.validate();
  }
  c.N = Ns.front();
  return {c, Ns};
}

}  // namespace tfde
