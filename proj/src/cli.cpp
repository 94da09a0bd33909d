#include "transfinite/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "transfinite/bijections.hpp"
#include "transfinite/errors.hpp"
#include "transfinite/hyperops.hpp"
#include "transfinite/ordinal.hpp"
#include "transfinite/parser.hpp"
#include "transfinite/realline.hpp"
#include "transfinite/tower.hpp"

namespace transfinite {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kUsage = R"(usage: transfinite [--json] <command> ...

ordinals
  ord eval EXPR              normalize an ordinal expression to CNF
  ord cmp A B                compare two ordinals (e0 allowed)
  ord classify EXPR          Zero | Successor | Limit
  ord fs EXPR N              n-th fundamental-sequence element (e0 allowed)
  ord card EXPR              Finite(n) | Aleph0
hyperoperations
  hyper A N B [--digits-only] [--guard D]
  graham K                   symbolic Graham-sequence term g_K
power tower
  tower X [--iters N] [--tol T] [--chain D] [--fig1 CSVPATH]
countability
  pair P Q | unpair N
  enum rationals N | enum integers N | enum hotel one|omega --window W
  diag digits FILE | diag subsets FILE | diag demo-binary N
  powerset a,b,c,...
appendix
  cf of P/Q | cf eval "[a0;a1,...]" | cf approx sqrt2|phi K
                             (each accepts --convergents CSVPATH)
  decimal P/Q
  liouville A B C N
  champernowne START N
  cover EPS N

Ordinal grammar: expr := term {'+' term}; term := power {'*' power};
power := atom ['^' power]; atom := 'w' | 'e0' | NAT | '(' expr ')'.
TRANSFINITE_GUARD_DIGITS overrides the hyperoperation digit guard.
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Args {
 public:
  explicit Args(const std::vector<std::string>& v) : args_(v) {}

  std::string next(const std::string& what) {
    if (pos_ >= args_.size()) throw UsageError("missing " + what);
    return args_[pos_++];
  }
  bool done() const { return pos_ >= args_.size(); }

  // Pulls a "--flag VALUE" pair out of the remaining arguments.
  std::optional<std::string> flag_value(const std::string& name) {
    for (size_t i = pos_; i < args_.size(); ++i) {
      if (args_[i] == name) {
        if (i + 1 >= args_.size()) throw UsageError(name + " needs a value");
        std::string v = args_[i + 1];
        args_.erase(args_.begin() + i, args_.begin() + i + 2);
        return v;
      }
    }
    return std::nullopt;
  }
  bool flag(const std::string& name) {
    for (size_t i = pos_; i < args_.size(); ++i) {
      if (args_[i] == name) {
        args_.erase(args_.begin() + i);
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::string> args_;
  size_t pos_ = 0;
};

uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be a natural number, got '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be a number, got '" + s + "'");
  }
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_sci(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9Lg", v);
  return buf;
}

// Splits "p/q"; a bare integer gets denominator 1.
std::pair<std::string, std::string> split_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return {s, "1"};
  return {s.substr(0, slash), s.substr(slash + 1)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t guard_from_env() {
  if (const char* env = std::getenv("TRANSFINITE_GUARD_DIGITS")) {
    return parse_u64(env, "TRANSFINITE_GUARD_DIGITS");
  }
  return kDefaultGuardDigits;
}

struct Command {
  std::string name;
  Json inputs = Json::object();
  std::string text;          // text-mode payload
  Json result;               // json-mode payload

  void line(const std::string& s) {
    text += s;
    text += "\n";
  }
};

void cmd_ord(Args& args, Command& out) {
  std::string sub = args.next("ord subcommand (eval|cmp|classify|fs|card)");
  if (sub == "eval") {
    std::string src = args.next("ordinal expression");
    out.inputs["expr"] = src;
    Ordinal v = eval_ordinal_string(src);
    out.text = v.to_string() + "\n";
    out.result = v.to_string();
  } else if (sub == "cmp") {
    std::string sa = args.next("first ordinal");
    std::string sb = args.next("second ordinal");
    out.inputs["a"] = sa;
    out.inputs["b"] = sb;
    auto c = compare(eval_ordinal_or_eps_string(sa), eval_ordinal_or_eps_string(sb));
    std::string r = c < 0 ? "LT" : (c > 0 ? "GT" : "EQ");
    out.text = r + "\n";
    out.result = r;
  } else if (sub == "classify") {
    std::string src = args.next("ordinal expression");
    out.inputs["expr"] = src;
    switch (classify(eval_ordinal_string(src))) {
      case OrdinalClass::Zero: out.result = "Zero"; break;
      case OrdinalClass::Successor: out.result = "Successor"; break;
      case OrdinalClass::Limit: out.result = "Limit"; break;
    }
    out.text = out.result.get<std::string>() + "\n";
  } else if (sub == "fs") {
    std::string src = args.next("ordinal expression");
    uint64_t n = parse_u64(args.next("index n"), "n");
    out.inputs["expr"] = src;
    out.inputs["n"] = n;
    Ordinal v = fundamental_sequence(eval_ordinal_or_eps_string(src), n);
    out.text = v.to_string() + "\n";
    out.result = v.to_string();
  } else if (sub == "card") {
    std::string src = args.next("ordinal expression");
    out.inputs["expr"] = src;
    CardinalClass c = cardinality(eval_ordinal_string(src));
    out.text = c.to_string() + "\n";
    out.result = c.to_string();
  } else {
    throw UsageError("unknown ord subcommand '" + sub + "'");
  }
}

void cmd_hyper(Args& args, Command& out) {
  uint64_t a = parse_u64(args.next("base A"), "A");
  uint64_t n = parse_u64(args.next("operator index N"), "N");
  uint64_t b = parse_u64(args.next("height B"), "B");
  uint64_t guard = guard_from_env();
  if (auto g = args.flag_value("--guard")) guard = parse_u64(*g, "--guard");
  bool digits_only = args.flag("--digits-only");
  out.inputs = {{"a", a}, {"n", n}, {"b", b}, {"guard", guard}};

  if (digits_only) {
    long double d = digit_estimate(a, n, b);
    out.text = fmt_sci(d) + "\n";
    out.result = static_cast<double>(d);
    return;
  }
  HyperResult r = hyper(a, n, b, guard);
  if (r.is_exact()) {
    out.text = r.exact().to_string() + "\n";
    out.result = {{"kind", "exact"}, {"value", r.exact().to_string()}};
  } else if (r.is_estimate()) {
    out.text = "about " + fmt_sci(r.estimate_digits()) + " digits\n";
    out.result = {{"kind", "digit-estimate"},
                  {"digits", static_cast<double>(r.estimate_digits())}};
  } else {
    out.text = r.symbolic().to_string() + " (symbolic: beyond exact and estimated range)\n";
    out.result = {{"kind", "symbolic"}, {"term", r.symbolic().to_string()}};
  }
}

void cmd_graham(Args& args, Command& out) {
  uint64_t k = parse_u64(args.next("level K"), "K");
  out.inputs = {{"k", k}};
  GrahamTerm g = graham(k);
  out.line(g.to_string());
  out.line(g.describe());
  out.result = {{"term", g.to_string()}, {"description", g.describe()}};
}

void cmd_tower(Args& args, Command& out) {
  double x = parse_double(args.next("X"), "X");
  uint64_t iters = 20000;
  double tol = 1e-10;
  if (auto v = args.flag_value("--iters")) iters = parse_u64(*v, "--iters");
  if (auto v = args.flag_value("--tol")) tol = parse_double(*v, "--tol");
  auto chain_depth = args.flag_value("--chain");
  auto fig1_path = args.flag_value("--fig1");
  out.inputs = {{"x", x}, {"iters", iters}, {"tol", tol}};

  if (chain_depth) {
    uint64_t depth = parse_u64(*chain_depth, "--chain");
    out.inputs["chain"] = depth;
    std::vector<double> chain = tower_chain(x, depth);
    std::string joined;
    Json arr = Json::array();
    for (double v : chain) {
      if (!joined.empty()) joined += " ";
      joined += fmt6(v);
      arr.push_back(v);
    }
    out.text = joined + "\n";
    out.result = arr;
    return;
  }
  if (fig1_path) {
    out.inputs["fig1"] = *fig1_path;
    std::vector<double> grid;
    for (int i = 0; i < 200; ++i) {
      grid.push_back(0.02 + i * (1.50 - 0.02) / 199.0);
    }
    auto rows = figure1_data(grid);
    std::string csv = figure1_csv(rows);
    std::ofstream f(*fig1_path, std::ios::binary);
    if (!f) throw Error("cannot write file: " + *fig1_path);
    f << csv;
    out.line("wrote " + std::to_string(rows.size()) + " rows to " + *fig1_path);
    out.result = {{"rows", rows.size()}, {"path", *fig1_path}};
    return;
  }

  TowerOutcome r = iterate_tower(x, iters, tol);
  switch (r.kind) {
    case TowerOutcome::Kind::Converged: {
      out.line("converged " + fmt6(r.value) + " after " +
               std::to_string(r.iterates.size()) + " iterates");
      out.result = {{"kind", "converged"}, {"value", r.value}};
      if (r.fixed_points) {
        std::string fp = "fixed points: stable " + fmt6(r.fixed_points->stable);
        out.result["stable"] = r.fixed_points->stable;
        if (r.fixed_points->unstable) {
          fp += ", unstable " + fmt6(*r.fixed_points->unstable);
          out.result["unstable"] = *r.fixed_points->unstable;
        }
        out.line(fp);
      }
      break;
    }
    case TowerOutcome::Kind::Diverged:
      out.line("diverged after " + std::to_string(r.iterates.size()) + " iterates");
      out.result = {{"kind", "diverged"}};
      break;
    case TowerOutcome::Kind::Oscillating:
      out.line("oscillating between " + fmt6(r.cycle_lo) + " and " + fmt6(r.cycle_hi));
      out.result = {{"kind", "oscillating"},
                    {"lo", r.cycle_lo},
                    {"hi", r.cycle_hi}};
      break;
  }
}

void cmd_pair(Args& args, Command& out) {
  BigNat p = BigNat::from_decimal(args.next("P"));
  BigNat q = BigNat::from_decimal(args.next("Q"));
  out.inputs = {{"p", p.to_string()}, {"q", q.to_string()}};
  BigNat n = cantor_pair(p, q);
  out.text = n.to_string() + "\n";
  out.result = n.to_string();
}

void cmd_unpair(Args& args, Command& out) {
  BigNat n = BigNat::from_decimal(args.next("N"));
  out.inputs = {{"n", n.to_string()}};
  auto [p, q] = cantor_unpair(n);
  out.text = p.to_string() + " " + q.to_string() + "\n";
  out.result = {{"p", p.to_string()}, {"q", q.to_string()}};
}

void cmd_enum(Args& args, Command& out) {
  std::string what = args.next("enum subcommand (rationals|integers|hotel)");
  if (what == "rationals") {
    uint64_t n = parse_u64(args.next("count"), "count");
    out.inputs = {{"count", n}};
    Json arr = Json::array();
    uint64_t room = 0;
    for (auto [p, q] : enumerate_rationals(n)) {
      std::string guest = std::to_string(p) + "/" + std::to_string(q);
      out.line(std::to_string(room++) + ": " + guest);
      arr.push_back(guest);
    }
    out.result = arr;
  } else if (what == "integers") {
    uint64_t n = parse_u64(args.next("count"), "count");
    out.inputs = {{"count", n}};
    Json arr = Json::array();
    for (uint64_t room = 0; room < n; ++room) {
      int64_t guest = nat_to_int(room);
      std::string g = guest > 0 ? "+" + std::to_string(guest) : std::to_string(guest);
      out.line(std::to_string(room) + ": " + g);
      arr.push_back(guest);
    }
    out.result = arr;
  } else if (what == "hotel") {
    std::string mode = args.next("one|omega");
    auto w = args.flag_value("--window");
    if (!w) throw UsageError("enum hotel needs --window W");
    uint64_t window = parse_u64(*w, "--window");
    out.inputs = {{"newcomers", mode}, {"window", window}};
    HotelNewcomers nc;
    if (mode == "one") {
      nc = HotelNewcomers::One;
    } else if (mode == "omega") {
      nc = HotelNewcomers::Omega;
    } else {
      throw UsageError("hotel newcomers must be 'one' or 'omega'");
    }
    Json arr = Json::array();
    for (const auto& m : hotel_shift(window, nc).moves) {
      out.line(m.guest + " -> room " + std::to_string(m.room));
      arr.push_back({{"guest", m.guest}, {"room", m.room}});
    }
    out.result = arr;
  } else {
    throw UsageError("unknown enum subcommand '" + what + "'");
  }
}

void cmd_diag(Args& args, Command& out) {
  std::string what = args.next("diag subcommand (digits|subsets|demo-binary)");
  if (what == "digits") {
    std::string path = args.next("digit-matrix file");
    out.inputs = {{"file", path}};
    std::string d = diagonalize_digits(DigitMatrix::from_text(read_file(path)));
    out.text = d + "\n";
    out.result = d;
  } else if (what == "subsets") {
    std::string path = args.next("subset-table file");
    out.inputs = {{"file", path}};
    auto bits = diagonalize_subsets(SubsetTable::from_text(read_file(path)));
    std::string s;
    for (bool b : bits) s += b ? 'Y' : 'N';
    out.text = s + "\n";
    out.result = s;
  } else if (what == "demo-binary") {
    uint64_t n = parse_u64(args.next("table size"), "size");
    out.inputs = {{"size", n}};
    // Row k lists the binary digits of k: the canonical enumeration whose
    // diagonal complement is all Y.
    SubsetTable t;
    for (uint64_t k = 0; k < n; ++k) {
      std::vector<bool> row;
      for (uint64_t bit = 0; bit < n; ++bit) row.push_back((k >> bit) & 1);
      t.rows.push_back(std::move(row));
    }
    for (const auto& row : t.rows) {
      std::string s;
      for (bool b : row) s += b ? 'Y' : 'N';
      out.line(s);
    }
    auto bits = diagonalize_subsets(t);
    std::string s;
    for (bool b : bits) s += b ? 'Y' : 'N';
    out.line("new: " + s);
    out.result = s;
  } else {
    throw UsageError("unknown diag subcommand '" + what + "'");
  }
}

void cmd_powerset(Args& args, Command& out) {
  std::string list = args.next("comma-separated elements");
  out.inputs = {{"elements", list}};
  std::vector<std::string> elements;
  if (!list.empty()) {
    size_t pos = 0;
    while (true) {
      size_t comma = list.find(',', pos);
      elements.push_back(list.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  Json arr = Json::array();
  for (const auto& subset : power_set(elements)) {
    std::string s = "{";
    for (size_t i = 0; i < subset.size(); ++i) {
      if (i) s += ",";
      s += subset[i];
    }
    s += "}";
    out.line(s);
    arr.push_back(subset);
  }
  out.result = arr;
}

// Convergent table as CSV, one row per truncation depth.
void write_convergents_csv(const ContinuedFraction& cf, const std::string& path,
                           Command& out) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write file: " + path);
  f << "k,numerator,denominator\n";
  auto conv = cf_convergents(cf, cf.quotients.size());
  for (size_t k = 0; k < conv.size(); ++k) {
    f << k << "," << conv[k].num().to_string() << "," << conv[k].den().to_string()
      << "\n";
  }
  out.line("wrote " + std::to_string(conv.size()) + " convergents to " + path);
}

void cmd_cf(Args& args, Command& out) {
  std::string what = args.next("cf subcommand (of|eval|approx)");
  auto csv = args.flag_value("--convergents");
  if (what == "of") {
    auto [ps, qs] = split_fraction(args.next("P/Q"));
    out.inputs = {{"p", ps}, {"q", qs}};
    ContinuedFraction cf = cf_of_rational(BigInt::from_decimal(ps), BigNat::from_decimal(qs));
    out.text = cf.to_string() + "\n";
    out.result = cf.to_string();
    if (csv) write_convergents_csv(cf, *csv, out);
  } else if (what == "eval") {
    std::string src = args.next("continued fraction [a0;a1,...]");
    out.inputs = {{"cf", src}};
    ContinuedFraction cf = ContinuedFraction::parse(src);
    Rational v = cf_eval(cf);
    out.text = v.to_string() + "\n";
    out.result = v.to_string();
    if (csv) write_convergents_csv(cf, *csv, out);
  } else if (what == "approx") {
    std::string which = args.next("sqrt2|phi");
    size_t k = parse_u64(args.next("depth K"), "K");
    out.inputs = {{"value", which}, {"k", k}};
    double v;
    if (which == "sqrt2") {
      v = 1.4142135623730951;
    } else if (which == "phi") {
      v = 1.618033988749895;
    } else {
      throw UsageError("cf approx knows 'sqrt2' and 'phi'");
    }
    ContinuedFraction cf = cf_approx_irrational(v, k);
    out.text = cf.to_string() + "\n";
    out.result = cf.to_string();
    if (csv) write_convergents_csv(cf, *csv, out);
  } else {
    throw UsageError("unknown cf subcommand '" + what + "'");
  }
}

void cmd_decimal(Args& args, Command& out) {
  auto [ps, qs] = split_fraction(args.next("P/Q"));
  out.inputs = {{"p", ps}, {"q", qs}};
  RepeatingDecimal d =
      decimal_expansion(BigNat::from_decimal(ps), BigNat::from_decimal(qs));
  out.text = d.to_string() + "\n";
  out.result = {{"integer", d.integer_part.to_string()},
                {"preperiod", d.preperiod},
                {"period", d.period}};
}

void cmd_liouville(Args& args, Command& out) {
  uint64_t a = parse_u64(args.next("A"), "A");
  uint64_t b = parse_u64(args.next("B"), "B");
  uint64_t c = parse_u64(args.next("C"), "C");
  uint64_t n = parse_u64(args.next("digit count"), "N");
  out.inputs = {{"a", a}, {"b", b}, {"c", c}, {"digits", n}};
  std::string s = liouville_digits(a, b, c, n);
  out.text = s + "\n";
  out.result = s;
}

void cmd_champernowne(Args& args, Command& out) {
  BigNat start = BigNat::from_decimal(args.next("START"));
  uint64_t n = parse_u64(args.next("digit count"), "N");
  out.inputs = {{"start", start.to_string()}, {"digits", n}};
  std::string s = champernowne_digits(start, n);
  out.text = s + "\n";
  out.result = s;
}

void cmd_cover(Args& args, Command& out) {
  std::string eps_s = args.next("EPS");
  uint64_t n = parse_u64(args.next("N"), "N");
  out.inputs = {{"epsilon", eps_s}, {"n", n}};
  CoverResult r = cover_measure(Rational::parse(eps_s), n);
  out.line("nominal=" + r.nominal_total.to_string());
  out.line("union=" + r.union_measure.to_string());
  out.result = {{"nominal", r.nominal_total.to_string()},
                {"union", r.union_measure.to_string()}};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& raw_args) {
  Args args(raw_args);
  bool json = args.flag("--json");
  Command out;
  try {
    out.name = args.next("command");
    if (out.name == "ord") {
      cmd_ord(args, out);
    } else if (out.name == "hyper") {
      cmd_hyper(args, out);
    } else if (out.name == "graham") {
      cmd_graham(args, out);
    } else if (out.name == "tower") {
      cmd_tower(args, out);
    } else if (out.name == "pair") {
      cmd_pair(args, out);
    } else if (out.name == "unpair") {
      cmd_unpair(args, out);
    } else if (out.name == "enum") {
      cmd_enum(args, out);
    } else if (out.name == "diag") {
      cmd_diag(args, out);
    } else if (out.name == "powerset") {
      cmd_powerset(args, out);
    } else if (out.name == "cf") {
      cmd_cf(args, out);
    } else if (out.name == "decimal") {
      cmd_decimal(args, out);
    } else if (out.name == "liouville") {
      cmd_liouville(args, out);
    } else if (out.name == "champernowne") {
      cmd_champernowne(args, out);
    } else if (out.name == "cover") {
      cmd_cover(args, out);
    } else if (out.name == "help" || out.name == "--help" || out.name == "-h") {
      return {0, kUsage};
    } else {
      return {2, "unknown command '" + out.name + "'\n" + kUsage};
    }
  } catch (const ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {2, std::string("error: ") + e.what() + "\n" + kUsage};
  } catch (const Error& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }

  if (json) {
    Json payload = {{"command", out.name}, {"inputs", out.inputs}, {"result", out.result}};
    return {0, payload.dump() + "\n"};
  }
  return {0, out.text};
}

}  // namespace transfinite
