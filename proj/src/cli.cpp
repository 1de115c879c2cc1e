#include "proot/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "proot/field.hpp"
#include "proot/order.hpp"
#include "proot/order_construct.hpp"
#include "proot/polynomial.hpp"
#include "proot/primitive_root.hpp"
#include "proot/selftest.hpp"

namespace proot::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Int>
Int parse_integer(const std::string& text, const char* what) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "': expected a decimal integer");
  }
  return value;
}

// Non-negative decimal below the modulus bound.
std::uint64_t parse_natural(const std::string& text, const char* what) {
  if (!text.empty() && text.front() == '-') throw UsageError(std::string(what) + " must be non-negative, got " + text);
  const auto value = parse_integer<std::uint64_t>(text, what);
  if (value >= kModulusBound) throw UsageError(std::string(what) + " " + text + " is not below 2^31");
  return value;
}

Prime parse_prime(const std::string& text, const char* what) { return Prime(parse_natural(text, what)); }

template <typename Range, typename Fn>
std::string join(const Range& items, const std::string& sep, Fn fn) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += fn(item);
  }
  return out.empty() ? "(none)" : out;
}

std::string residue_str(const FieldElement& e) { return std::to_string(e.residue()); }

json residues(const std::vector<FieldElement>& elements) {
  json out = json::array();
  for (const auto& e : elements) out.push_back(e.residue());
  return out;
}

struct Options {
  std::string format = "text";
  std::uint64_t bound = 211;
  std::vector<std::string> find, verify, order, witness, roots;
};

bool as_json(const Options& o) { return o.format == "json"; }

int cmd_find(const Options& o, std::ostream& out) {
  const Prime p = parse_prime(o.find.at(0), "p");
  const PrimitiveRootResult r = decompose_with_witnesses(p);
  const std::uint64_t ord = order_fast(r.root);
  if (as_json(o)) {
    json factors = json::array();
    for (const auto& f : r.factors) factors.push_back({{"q", f.q.value()}, {"n", f.n}});
    out << json{{"p", p.value()}, {"root", r.root.residue()}, {"order", ord}, {"factors", factors},
                {"witnesses", residues(r.witnesses)}}
               .dump()
        << '\n';
  } else {
    out << "p: " << p.value() << '\n'
        << "primitive root: " << r.root.residue() << '\n'
        << "order: " << ord << '\n'
        << "factors: "
        << join(r.factors, " * ", [](const PrimePowerFactor& f) { return std::to_string(f.q.value()) + "^" + std::to_string(f.n); })
        << '\n'
        << "witnesses: " << join(r.witnesses, ", ", residue_str) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::uint64_t g = parse_natural(o.verify.at(0), "g");
  const Prime p = parse_prime(o.verify.at(1), "p");
  const bool yes = is_primitive_root(g, p);
  if (as_json(o)) {
    out << json{{"g", g}, {"p", p.value()}, {"primitive_root", yes}}.dump() << '\n';
  } else {
    out << g << (yes ? " is a primitive root of " : " is not a primitive root of ") << p.value() << '\n';
  }
  return yes ? kExitOk : kExitFalse;
}

int cmd_order(const Options& o, std::ostream& out) {
  const std::uint64_t a = parse_natural(o.order.at(0), "a");
  const Prime p = parse_prime(o.order.at(1), "p");
  const FieldElement x(a, p);
  if (x.is_zero()) throw UsageError("0 has no multiplicative order");
  const PowerTrace trace = all_powers(x);
  if (as_json(o)) {
    out << json{{"a", a}, {"p", p.value()}, {"order", trace.length()}, {"trace", residues(trace.entries)}}.dump() << '\n';
  } else {
    out << "order of " << a << " mod " << p.value() << ": " << trace.length() << '\n'
        << "trace: " << join(trace.entries, ", ", residue_str) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const Prime q = parse_prime(o.witness.at(0), "q");
  const std::uint64_t n = parse_natural(o.witness.at(1), "n");
  const Prime p = parse_prime(o.witness.at(2), "p");
  const auto qn = checked_power(q.value(), n);
  if (!qn || !divides(*qn, p.value() - 1)) {
    throw UsageError(std::to_string(q.value()) + "^" + std::to_string(n) + " does not divide p - 1 = " +
                     std::to_string(p.value() - 1));
  }
  const FieldElement w = witness_with_order_q_n(q, n, p);
  const std::uint64_t ord = order_fast(w);
  if (as_json(o)) {
    out << json{{"q", q.value()}, {"n", n}, {"p", p.value()}, {"witness", w.residue()}, {"order", ord}}.dump() << '\n';
  } else {
    out << "witness of order " << q.value() << "^" << n << " mod " << p.value() << ": " << w.residue() << '\n'
        << "order: " << ord << '\n';
  }
  return kExitOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  if (o.roots.size() < 2) throw UsageError("roots needs a modulus and at least one coefficient");
  const Prime p = parse_prime(o.roots.front(), "p");
  std::vector<BigInt> coeffs;
  std::vector<std::int64_t> raw;
  for (auto it = o.roots.begin() + 1; it != o.roots.end(); ++it) {
    raw.push_back(parse_integer<std::int64_t>(*it, "coefficient"));
    coeffs.emplace_back(raw.back());
  }
  const IntPolynomial poly(std::move(coeffs));
  if (!non_trivial_pfield_polynomial_p(poly, p)) {
    throw UsageError("leading coefficient " + o.roots.back() + " is 0 mod " + std::to_string(p.value()));
  }
  const auto roots = pfield_polynomial_roots(poly, p);
  if (as_json(o)) {
    out << json{{"p", p.value()}, {"coefficients", raw}, {"roots", residues(roots)}, {"count", roots.size()}}.dump()
        << '\n';
  } else {
    out << "roots: " << join(roots, ", ", residue_str) << '\n' << "count: " << roots.size() << '\n';
  }
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  if (o.bound < 2 || o.bound >= kModulusBound) throw UsageError("--bound must lie in [2, 2^31)");
  const auto results = run_selftest(o.bound);
  const bool all_pass = std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.pass; });
  if (as_json(o)) {
    json properties = json::array();
    for (const auto& r : results) properties.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << json{{"bound", o.bound}, {"properties", properties}, {"pass", all_pass}}.dump() << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.pass) out << ": " << r.detail;
      out << '\n';
      passed += r.pass;
    }
    out << passed << "/" << results.size() << " properties passed (bound " << o.bound << ")\n";
  }
  return all_pass ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive primitive roots over Z/pZ", "proot"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* find = app.add_subcommand("find", "Construct a primitive root of p and show the factor/witness trail");
  find->add_option("p", o.find, "Prime modulus")->required()->expected(1);

  auto* verify = app.add_subcommand("verify", "Check whether g is a primitive root of p");
  verify->add_option("args", o.verify, "g p")->required()->expected(2);

  auto* order_cmd = app.add_subcommand("order", "Multiplicative order and power trace of a mod p");
  order_cmd->add_option("args", o.order, "a p")->required()->expected(2);

  auto* witness = app.add_subcommand("witness", "Least element of order q^n mod p");
  witness->add_option("args", o.witness, "q n p")->required()->expected(3);

  auto* roots = app.add_subcommand("roots", "Roots mod p of c0 + c1 x + ... + ck x^k");
  roots->add_option("args", o.roots, "p c0 [c1 ... ck]")->required()->expected(2, -1);

  auto* selftest = app.add_subcommand("selftest", "Sweep every library invariant up to a bound");
  selftest->add_option("--bound", o.bound, "Largest prime/integer to sweep")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*find) return cmd_find(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*order_cmd) return cmd_order(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*roots) return cmd_roots(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace proot::cli
