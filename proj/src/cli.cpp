#include "ordpigeon/cli.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "ordpigeon/acceptance.hpp"
#include "ordpigeon/notation.hpp"
#include "ordpigeon/pigeonhole.hpp"

namespace ordpigeon {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kUnrepresentable = 3;

std::string fmt(const Ordinal& a) { return format_ordinal(a); }

json instance_to_json(const Instance& inst) {
  json arr = json::array();
  for (const Entry& e : inst.entries) {
    arr.push_back({{"target", fmt(e.target)}, {"count", format_cardinal(e.multiplicity)}});
  }
  return arr;
}

Instance instance_from_json(const json& arr) {
  Instance inst;
  for (const json& e : arr) {
    inst.entries.push_back(Entry{parse_ordinal(e.at("target").get<std::string>()),
                                 parse_cardinal(e.at("count").get<std::string>())});
  }
  return inst;
}

std::vector<Ordinal> parse_all(const std::vector<std::string>& texts) {
  std::vector<Ordinal> out;
  for (const std::string& t : texts) out.push_back(parse_ordinal(t));
  return out;
}

json strings(const std::vector<Ordinal>& v) {
  json arr = json::array();
  for (const Ordinal& a : v) arr.push_back(fmt(a));
  return arr;
}

const char* kind_name(const CertificateKind& k) {
  switch (k.index()) {
    case 0: return "derivative_empty";
    case 1: return "derivative_small";
    case 2: return "derivative_not_embeddable";
    default: return "cofinality_split";
  }
}

struct Context {
  bool as_json = false;
  Style style = Style::Ascii;
  std::ostream& out;
  std::ostream& err;

  std::string show(const Ordinal& a) const { return format_ordinal(a, style); }

  void emit(const std::string& command, json inputs, json result, const json& extra = {}) const {
    json env = {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
    for (const auto& [k, v] : extra.items()) env[k] = v;
    out << env.dump(2) << "\n";
  }
};

// ---------------------------------------------------------------- commands

int cmd_ptop(const Context& c, const std::vector<std::string>& entries) {
  const Instance inst = parse_instance(entries);
  const CaseExplanation ex = explain_case(inst);
  if (c.as_json) {
    c.emit("ptop", {{"instance", instance_to_json(inst)}}, result_to_json(ex.result),
           {{"case_path", to_string(ex.path)}, {"citations", ex.trail}});
    return kOk;
  }
  if (const auto* ind = std::get_if<Independent>(&ex.result)) {
    c.out << "independent of ZFC\n"
          << "ZFC lower bound: " << c.show(ind->zfc_lower) << "\n"
          << "consistently infinite: " << ind->consistent_infinite << "\n"
          << "consistently equal to the lower bound: " << ind->consistent_equal_lower << "\n"
          << "equiconsistency: " << ind->equiconsistency << "\n";
  } else {
    c.out << format_result(ex.result, c.style) << "\n";
  }
  return kOk;
}

int cmd_list(const Context& c, const std::string& command, const std::vector<std::string>& args) {
  const std::vector<Ordinal> v = parse_all(args);
  Ordinal r;
  if (command == "natsum") {
    r = natural_sum(std::span<const Ordinal>(v));
  } else {
    for (const Ordinal& a : v) {
      if (a.is_zero()) throw Error(ErrorKind::ZeroInput, command + " needs positive ordinals");
    }
    r = command == "pord" ? p_ord(std::span<const Ordinal>(v)) : mr_sum(std::span<const Ordinal>(v));
  }
  if (c.as_json) {
    c.emit(command, {{"ordinals", strings(v)}}, {{"value", fmt(r)}});
  } else {
    c.out << c.show(r) << "\n";
  }
  return kOk;
}

int cmd_arith(const Context& c, const std::string& op, const std::string& a_text,
              const std::string& b_text) {
  const Ordinal a = parse_ordinal(a_text);
  const Ordinal b = parse_ordinal(b_text);
  std::string value;
  if (op == "add") {
    value = fmt(add(a, b));
  } else if (op == "mul") {
    value = fmt(mul(a, b));
  } else {
    const auto ord = compare(a, b);
    value = ord < 0 ? "LT" : (ord > 0 ? "GT" : "EQ");
  }
  if (c.as_json) {
    c.emit("arith", {{"op", op}, {"a", fmt(a)}, {"b", fmt(b)}}, {{"value", value}});
  } else if (op == "cmp") {
    c.out << value << "\n";
  } else {
    c.out << c.show(parse_ordinal(value)) << "\n";
  }
  return kOk;
}

int cmd_classify(const Context& c, const std::string& text) {
  const ParsedOrdinal p = parse_ordinal_ex(text);
  const Ordinal& a = p.value;
  json r = {
      {"canonical", fmt(a)},
      {"non_canonical_input", p.non_canonical},
      {"biembed_canonical", fmt(biembed_canonical(a))},
      {"power_of_omega", is_power_of_omega(a)},
      {"order_reinforcing", is_order_reinforcing(a)},
      {"cb_rank", fmt(cb_rank(a))},
      {"cofinality", fmt(cofinality(a))},
  };
  if (c.as_json) {
    c.emit("classify", {{"ordinal", text}}, r);
    return kOk;
  }
  c.out << "canonical form: " << c.show(a) << (p.non_canonical ? " (input not canonical)" : "")
        << "\n"
        << "biembeddability class: " << c.show(biembed_canonical(a)) << "\n"
        << "power of w: " << (is_power_of_omega(a) ? "yes" : "no") << "\n"
        << "order-reinforcing: " << (is_order_reinforcing(a) ? "yes" : "no") << "\n"
        << "CB rank: " << c.show(cb_rank(a)) << "\n"
        << "cofinality: " << c.show(cofinality(a)) << "\n";
  return kOk;
}

int cmd_case(const Context& c, const std::vector<std::string>& entries) {
  const Instance inst = parse_instance(entries);
  const CaseExplanation ex = explain_case(inst);
  if (c.as_json) {
    c.emit("case", {{"instance", instance_to_json(inst)}}, result_to_json(ex.result),
           {{"case_path", to_string(ex.path)}, {"citations", ex.trail}});
    return kOk;
  }
  c.out << to_string(ex.path) << "\n";
  for (const std::string& line : ex.trail) c.out << "  " << line << "\n";
  c.out << "P = " << format_result(ex.result, c.style) << "\n";
  return kOk;
}

void print_witness(const Context& c, const Witness& w) {
  const RankColouring& col = w.colouring;
  if (col.mode == ColouringMode::Cofinality) {
    c.out << "cofinality colouring of " << c.show(col.domain)
          << ": colour 1 iff cf(x) >= w_1\n";
  } else {
    c.out << "rank colouring of " << c.show(col.domain) << " with top rank "
          << c.show(col.top_exponent) << "\n";
    for (std::size_t i = 0; i < col.rank_classes.size(); ++i) {
      c.out << "  colour " << i << " (target " << c.show(col.colour_targets[i]) << "): ranks";
      for (const Interval& iv : col.rank_classes[i]) {
        c.out << " [" << c.show(iv.lo) << ", " << c.show(iv.hi) << ")";
      }
      c.out << "\n";
    }
    c.out << "  point 0: colour " << col.zero_colour << "\n";
    for (std::size_t l = 0; l < col.top_point_colours.size(); ++l) {
      c.out << "  point " << c.show(mul(omega_pow(col.top_exponent), Ordinal(l + 1)))
            << ": colour " << col.top_point_colours[l] << "\n";
    }
  }
  for (const ObstructionCertificate& cert : w.certificates) {
    c.out << "  certificate for colour " << cert.colour << ": " << kind_name(cert.kind);
    std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, DerivativeEmpty>) {
            c.out << " at level " << c.show(k.level);
          } else if constexpr (std::is_same_v<K, DerivativeSmall>) {
            c.out << " at level " << c.show(k.level) << ", at most " << k.bound << " points";
          } else if constexpr (std::is_same_v<K, DerivativeNotEmbeddable>) {
            c.out << " at level " << c.show(k.level) << ", " << c.show(k.class_residual)
                  << " vs " << c.show(k.target_residual);
          }
        },
        cert.kind);
    c.out << "\n";
  }
}

int cmd_witness(const Context& c, const std::string& beta_text,
                const std::vector<std::string>& entries) {
  const Ordinal beta = parse_ordinal(beta_text);
  const Instance inst = parse_instance(entries);
  const Normalization n = normalize(inst);
  const auto* norm = std::get_if<NormalizedInstance>(&n);
  if (norm == nullptr) {
    throw Error(ErrorKind::OutOfScope, "instance is decided without a colouring");
  }
  const Witness w = build_counterexample(beta, *norm);
  if (c.as_json) {
    c.emit("witness", {{"beta", fmt(beta)}, {"instance", instance_to_json(inst)}},
           witness_to_json(w), {{"case_path", to_string(classify_case(*norm))}});
  } else {
    print_witness(c, w);
  }
  return kOk;
}

int cmd_verify(const Context& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::PreconditionViolated, "cannot open " + path);
  const json env = json::parse(in);
  const Instance inst = instance_from_json(env.at("inputs").at("instance"));
  const Ordinal beta = parse_ordinal(env.at("inputs").at("beta").get<std::string>());
  const Witness w = witness_from_json(env.at("result"));
  bool valid = false;
  std::string reason;
  const Normalization n = normalize(inst);
  if (const auto* norm = std::get_if<NormalizedInstance>(&n)) {
    valid = w.colouring.domain == beta && verify_certificates(w.colouring, *norm, w.certificates);
    if (!valid) reason = "certificates do not check out";
  } else {
    reason = "instance is decided without a colouring";
  }
  if (c.as_json) {
    json r = {{"valid", valid}};
    if (!valid) r["reason"] = reason;
    c.emit("verify", {{"file", path}}, r);
  } else {
    c.out << (valid ? "valid" : "invalid: " + reason) << "\n";
  }
  return valid ? kOk : kFailure;
}

int cmd_selftest(const Context& c, const std::vector<int>& only) {
  AcceptanceOptions opts;
  opts.only = only;
  bool all = true;
  json rows = json::array();
  run_acceptance(opts, [&](const CriterionOutcome& o) {
    all = all && o.passed;
    if (c.as_json) {
      rows.push_back({{"id", o.id},
                      {"title", o.title},
                      {"passed", o.passed},
                      {"detail", o.detail},
                      {"seconds", o.seconds},
                      {"budget_seconds", o.budget_seconds}});
    } else {
      c.out << format_outcome(o) << std::endl;
    }
  });
  if (c.as_json) {
    c.emit("selftest", {{"only", only}}, {{"passed", all}, {"criteria", rows}});
  } else {
    c.out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  return all ? kOk : kFailure;
}

int report_error(const Context& c, const std::string& command, const Error& e) {
  c.err << "error: " << e.what() << "\n";
  if (c.as_json) {
    c.out << json{{"command", command},
                  {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}
                 .dump(2)
          << "\n";
  }
  switch (e.kind()) {
    case ErrorKind::SyntaxError: return kUsage;
    case ErrorKind::UnrepresentableInput: return kUnrepresentable;
    default: return kFailure;
  }
}

}  // namespace

json result_to_json(const PigeonholeResult& r) {
  if (const auto* e = std::get_if<Exists>(&r)) return {{"kind", "exists"}, {"value", fmt(e->value)}};
  if (std::holds_alternative<Infinite>(r)) return {{"kind", "infinite"}};
  const Independent& i = std::get<Independent>(r);
  return {{"kind", "independent"},
          {"zfc_lower", fmt(i.zfc_lower)},
          {"consistent_infinite", i.consistent_infinite},
          {"consistent_equal_lower", i.consistent_equal_lower},
          {"equiconsistency", i.equiconsistency}};
}

json witness_to_json(const Witness& w) {
  const RankColouring& col = w.colouring;
  json classes = json::array();
  for (const IntervalUnion& u : col.rank_classes) {
    json ivs = json::array();
    for (const Interval& iv : u) ivs.push_back({fmt(iv.lo), fmt(iv.hi)});
    classes.push_back(ivs);
  }
  json colouring = {
      {"mode", col.mode == ColouringMode::Rank ? "rank" : "cofinality"},
      {"domain", fmt(col.domain)},
      {"top_exponent", fmt(col.top_exponent)},
      {"colour_targets", strings(col.colour_targets)},
      {"rank_classes", classes},
      {"top_point_colours", col.top_point_colours},
      {"zero_colour", col.zero_colour},
  };
  json certs = json::array();
  for (const ObstructionCertificate& cert : w.certificates) {
    json j = {{"colour", cert.colour},
              {"kind", kind_name(cert.kind)},
              {"claimed_target", fmt(cert.claimed_target)}};
    std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, DerivativeEmpty>) {
            j["level"] = fmt(k.level);
          } else if constexpr (std::is_same_v<K, DerivativeSmall>) {
            j["level"] = fmt(k.level);
            j["bound"] = k.bound;
          } else if constexpr (std::is_same_v<K, DerivativeNotEmbeddable>) {
            j["level"] = fmt(k.level);
            j["class_residual"] = fmt(k.class_residual);
            j["target_residual"] = fmt(k.target_residual);
          }
        },
        cert.kind);
    certs.push_back(j);
  }
  return {{"colouring", colouring}, {"certificates", certs}};
}

Witness witness_from_json(const json& j) {
  auto ord = [](const json& v) { return parse_ordinal(v.get<std::string>()); };
  Witness w;
  const json& cj = j.at("colouring");
  RankColouring& col = w.colouring;
  const std::string mode = cj.at("mode").get<std::string>();
  if (mode != "rank" && mode != "cofinality") {
    throw Error(ErrorKind::PreconditionViolated, "unknown colouring mode " + mode);
  }
  col.mode = mode == "rank" ? ColouringMode::Rank : ColouringMode::Cofinality;
  col.domain = ord(cj.at("domain"));
  col.top_exponent = ord(cj.at("top_exponent"));
  for (const json& t : cj.at("colour_targets")) col.colour_targets.push_back(ord(t));
  for (const json& u : cj.at("rank_classes")) {
    IntervalUnion ivs;
    for (const json& iv : u) ivs.push_back(Interval{ord(iv.at(0)), ord(iv.at(1))});
    col.rank_classes.push_back(ivs);
  }
  col.top_point_colours = cj.at("top_point_colours").get<std::vector<std::size_t>>();
  col.zero_colour = cj.at("zero_colour").get<std::size_t>();

  for (const json& cert : j.at("certificates")) {
    ObstructionCertificate c;
    c.colour = cert.at("colour").get<std::size_t>();
    c.claimed_target = ord(cert.at("claimed_target"));
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "derivative_empty") {
      c.kind = DerivativeEmpty{ord(cert.at("level"))};
    } else if (kind == "derivative_small") {
      c.kind = DerivativeSmall{ord(cert.at("level")), cert.at("bound").get<std::uint64_t>()};
    } else if (kind == "derivative_not_embeddable") {
      c.kind = DerivativeNotEmbeddable{ord(cert.at("level")), ord(cert.at("class_residual")),
                                       ord(cert.at("target_residual"))};
    } else if (kind == "cofinality_split") {
      c.kind = CofinalitySplit{};
    } else {
      throw Error(ErrorKind::PreconditionViolated, "unknown certificate kind " + kind);
    }
    w.certificates.push_back(std::move(c));
  }
  return w;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological pigeonhole numbers for ordinals", "ordpigeon"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_output = false;
  bool unicode = false;
  app.add_flag("--json", json_output, "Emit a JSON envelope");
  app.add_flag("--unicode", unicode, "Print ordinals with unicode symbols");

  std::vector<std::string> entries;
  std::vector<std::string> ordinals;
  std::string op, a, b, beta, file;
  std::vector<int> only;

  const char* instance_help = "Targets as <ordinal>[:<count>], e.g. w+1:3 or 2:aleph_0";
  auto* ptop = app.add_subcommand("ptop", "Topological pigeonhole number P^top");
  ptop->add_option("entries", entries, instance_help)->required();
  auto* pord = app.add_subcommand("pord", "Order-type pigeonhole number P^ord");
  pord->add_option("ordinals", ordinals)->required();
  auto* mrsum = app.add_subcommand("mrsum", "Milner-Rado sum");
  mrsum->add_option("ordinals", ordinals)->required();
  auto* natsum = app.add_subcommand("natsum", "Natural (Hessenberg) sum");
  natsum->add_option("ordinals", ordinals)->required();
  auto* arith = app.add_subcommand("arith", "Ordinal add, mul or compare");
  arith->add_option("op", op)->required()->check(CLI::IsMember({"add", "mul", "cmp"}));
  arith->add_option("a", a)->required();
  arith->add_option("b", b)->required();
  auto* classify = app.add_subcommand("classify", "Properties of a single ordinal");
  classify->add_option("ordinal", a)->required();
  auto* kase = app.add_subcommand("case", "Case of the analysis an instance falls under");
  kase->add_option("entries", entries, instance_help)->required();
  auto* witness = app.add_subcommand("witness", "Colouring of beta avoiding every target");
  witness->add_option("beta", beta)->required();
  witness->add_option("entries", entries, instance_help)->required();
  auto* verify = app.add_subcommand("verify", "Check a witness file written by witness --json");
  verify->add_option("file", file)->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--only", only, "Criteria to run (default: all)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Context c{json_output, unicode ? Style::Unicode : Style::Ascii, out, err};
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*ptop) return cmd_ptop(c, entries);
    if (*pord || *mrsum || *natsum) return cmd_list(c, command, ordinals);
    if (*arith) return cmd_arith(c, op, a, b);
    if (*classify) return cmd_classify(c, a);
    if (*kase) return cmd_case(c, entries);
    if (*witness) return cmd_witness(c, beta, entries);
    if (*verify) return cmd_verify(c, file);
    return cmd_selftest(c, only);
  } catch (const Error& e) {
    return report_error(c, command, e);
  } catch (const json::exception& e) {
    err << "error: malformed witness file: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace ordpigeon
