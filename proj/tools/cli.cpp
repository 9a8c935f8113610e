#include "cli.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lorder/discrete.hpp"
#include "lorder/euclid.hpp"
#include "lorder/expr.hpp"
#include "lorder/invariants.hpp"
#include "lorder/rewrites.hpp"

namespace lorder::cli {

namespace {

using nlohmann::json;

// Expressions starting with '{' are JSON trees; anything else is the term syntax.
Tree3S read_tree(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::BadJson, e.what());
    }
    return tree_from_json(j);
  }
  return parse_tree(text);
}

// "0.2.1", "0,2,1", "[0,2,1]" or "" for the root.
TreePath read_path(const std::string& text) {
  TreePath p;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    p.push_back(std::stoul(digits));
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (c == '.' || c == ',') {
      if (digits.empty()) throw Error(ErrorKind::BadPath, "malformed path '" + text + "'");
      flush();
    } else if (c != '[' && c != ']' && c != ' ') {
      throw Error(ErrorKind::BadPath, "malformed path '" + text + "'");
    }
  }
  flush();
  return p;
}

struct Emitter {
  std::ostream& out;
  bool json_mode;

  void emit(const std::string& text, const json& j) const {
    if (json_mode)
      out << j.dump() << '\n';
    else
      out << text << '\n';
  }
  int decide(const char* key, bool yes) const {
    emit(yes ? "yes" : "no", json{{key, yes}});
    return yes ? kYes : kNo;
  }
};

Bounds bounds_of(const CliConfig& c) { return {c.k_max, c.unroll}; }

json tree_json(const Tree3S& t) { return {{"expr", print(t)}, {"tree", to_json(t)}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely presented linear orders as 3-signed trees", "lorder"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string output = "text";
  app.add_option("--depth", cfg.search_depth, "Rewrite oracle depth")->check(CLI::PositiveNumber);
  app.add_option("--m-max", cfg.m_max, "Largest m tried by the oracle")->check(CLI::PositiveNumber);
  app.add_option("--k-max", cfg.k_max, "Copies consumed by a division search")
      ->check(CLI::PositiveNumber);
  app.add_option("--unroll", cfg.unroll, "Copies of a w*-period appended to a rest")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.node_budget, "Oracle node budget")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string a, b, path;
  std::size_t times = 1, m = 2;
  std::map<std::string, CLI::App*> subs;
  auto unary = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help)->fallthrough();
    s->add_option("expr", a, "Expression or JSON tree")->required();
    subs[name] = s;
    return s;
  };
  auto binary = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help)->fallthrough();
    s->add_option("a", a, "First expression")->required();
    s->add_option("b", b, "Second expression")->required();
    subs[name] = s;
    return s;
  };
  unary("parse", "Show the expression syntax tree");
  unary("print", "Print the normalized term");
  unary("rank", "Hausdorff rank");
  unary("derive", "Derivative")->add_option("--times", times, "Iterations");
  unary("endpoints", "Least and greatest points");
  unary("discrete", "Is the order discrete?");
  unary("width", "Width");
  unary("fingerprint", "Invariant fingerprint");
  binary("iso", "Are A and B isomorphic?");
  binary("prefix", "Is A an initial segment of B?");
  binary("suffix", "Is A a final segment of B?");
  binary("divide", "Euclidean division of B by A");
  unary("exude", "EXUDE at a path")->add_option("--path", path, "Node path")->required();
  {
    CLI::App* s = unary("repl", "m-REPL at a path");
    s->add_option("--path", path, "Node path")->required();
    s->add_option("--m", m, "Copies")->required()->check(CLI::PositiveNumber);
  }
  binary("oracle", "Search for a rewrite witness from A to B");
  unary("decompose", "Discrete decomposition");
  unary("ast", "Alternating signed tree of a discrete indecomposable");
  unary("a3st", "Alternating 3-signed tree of a bounded discrete order");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "lorder: " << e.what() << '\n';
    return kError;
  }
  cfg.json = output == "json";
  const Emitter em{out, cfg.json};
  const Bounds bounds = bounds_of(cfg);

  std::string cmd;
  for (const auto& [name, s] : subs)
    if (s->parsed()) cmd = name;

  try {
    if (cmd == "parse") {
      const OrderExpr e = parse(a);
      em.emit(to_string(e), to_json(to_tree(e)));
      return kYes;
    }
    if (cmd == "oracle") {
      SearchLimits lim;
      lim.depth = cfg.search_depth;
      lim.m_max = cfg.m_max;
      lim.node_budget = cfg.node_budget;
      const auto w = search_equiv(read_tree(a), read_tree(b), lim);
      if (!w) {
        em.emit("unknown", json{{"witness", nullptr}});
        return kIndeterminate;
      }
      em.emit(to_string(*w), json{{"witness", to_json(*w)}});
      return kYes;
    }

    const Tree3S t = read_tree(a);
    if (cmd == "print") {
      em.emit(print(t), tree_json(t));
    } else if (cmd == "rank") {
      const std::size_t r = rank(t);
      em.emit(std::to_string(r), json{{"rank", r}});
    } else if (cmd == "derive") {
      const Tree3S d = derivative(t, times);
      em.emit(print(d), tree_json(d));
    } else if (cmd == "endpoints") {
      const Endpoints e = endpoints(t);
      std::ostringstream s;
      s << "min " << (e.has_min ? "yes" : "no") << ", max " << (e.has_max ? "yes" : "no");
      em.emit(s.str(), json{{"min", e.has_min}, {"max", e.has_max}});
    } else if (cmd == "discrete") {
      return em.decide("discrete", is_discrete(t));
    } else if (cmd == "width") {
      const std::size_t w = width(t, bounds);
      em.emit(std::to_string(w), json{{"width", w}});
    } else if (cmd == "fingerprint") {
      const Fingerprint f = fingerprint(t);
      em.emit(to_string(f), to_json(f));
    } else if (cmd == "iso") {
      return em.decide("iso", iso(t, read_tree(b)));
    } else if (cmd == "prefix") {
      return em.decide("prefix", is_prefix_embeddable(t, read_tree(b), bounds));
    } else if (cmd == "suffix") {
      return em.decide("suffix", is_suffix_embeddable(t, read_tree(b), bounds));
    } else if (cmd == "divide") {
      const auto d = euclid_divide(t, read_tree(b), bounds);
      if (!d) {
        em.emit("none", json{{"division", nullptr}});
        return kNo;
      }
      em.emit("k " + std::to_string(d->k) + ", l1 " + print(d->l1) + ", l2 " + print(d->l2),
              json{{"division", to_json(*d)}});
    } else if (cmd == "exude") {
      const Tree3S r = exude(t, read_path(path));
      em.emit(print(r), tree_json(r));
    } else if (cmd == "repl") {
      const Tree3S r = repl(t, read_path(path), m);
      em.emit(print(r), tree_json(r));
    } else if (cmd == "decompose") {
      const DiscreteForm f = discrete_decompose(t);
      em.emit(std::string(to_string(f.shape)) + " " + print(f.core),
              json{{"shape", to_string(f.shape)}, {"core", tree_json(f.core)}});
    } else if (cmd == "ast") {
      const SignedTree s = ast_for_discrete_indec(t, bounds);
      em.emit(to_string(s), to_json(s));
    } else if (cmd == "a3st") {
      const Tree3S r = a3st_for_bounded_discrete(t);
      em.emit(print(r), tree_json(r));
    }
    return kYes;
  } catch (const Error& e) {
    err << "lorder: " << to_string(e.kind()) << ": " << e.what() << '\n';
    const bool limit = e.kind() == ErrorKind::BoundExceeded || e.kind() == ErrorKind::ResourceLimit;
    return limit ? kIndeterminate : kError;
  }
}

}  // namespace lorder::cli
