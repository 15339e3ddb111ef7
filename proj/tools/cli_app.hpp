#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lpa/lpa.hpp"

namespace lpa::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_fail = 1,
  exit_undetermined = 2,
  exit_usage = 64,
  exit_data = 65,
  exit_no_input = 66,
  exit_internal = 70,
};

struct Options {
  std::string command;
  std::string graph_file;
  std::string degrees = "canonical";
  std::string ring = "z";
  std::size_t bound = 4;
  std::optional<std::string> window;
  std::uint64_t seed = 1;
  std::string output = "text";
  std::vector<std::string> exprs;
  std::optional<std::string> degree;
  std::string property;
  std::size_t samples = 0;  // 0: command default
  std::size_t triples = 50;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupSpec parse_group_name(const std::string& name) {
  try {
    if (name == "Z") return GroupSpec::integers();
    if (name.rfind("Z^", 0) == 0) return GroupSpec::lattice(std::stoul(name.substr(2)));
    if (name.rfind("Z/", 0) == 0) return GroupSpec::cyclic(std::stoll(name.substr(2)));
  } catch (const std::logic_error&) {
  }
  throw UsageError("unknown group '" + name + "' (expected Z, Z^k or Z/n)");
}

/// "canonical", "canonical:<group>" or a degree-map file. Table files named
/// inside a degree map resolve relative to that file.
inline DegreeMap load_degrees(const std::string& spec, const Graph& g) {
  if (spec == "canonical") return DegreeMap::canonical(g);
  if (spec.rfind("canonical:", 0) == 0)
    return DegreeMap::canonical(g, parse_group_name(spec.substr(10)));
  const std::filesystem::path path(spec);
  return parse_degree_map(read_file(path), g, [&](const std::string& name) {
    std::filesystem::path p(name);
    return read_file(p.is_absolute() ? p : path.parent_path() / p);
  });
}

/// "A..B" (a box for Z^k), "all" for finite groups, or elements separated
/// by ';'. The default is the whole group when finite, else -bound..bound.
inline std::vector<GroupElement> parse_window(const std::optional<std::string>& text,
                                              const GroupSpec& group, std::size_t bound) {
  const std::string w = text ? *text : (group.is_finite() ? "all" : "-" + std::to_string(bound) +
                                                                        ".." +
                                                                        std::to_string(bound));
  if (w == "all") {
    if (!group.is_finite()) throw UsageError("window 'all' needs a finite group");
    return group.elements();
  }
  std::vector<GroupElement> out;
  if (auto dots = w.find(".."); dots != std::string::npos) {
    std::int64_t lo = 0, hi = 0;
    try {
      std::size_t used_lo = 0, used_hi = 0;
      lo = std::stoll(w.substr(0, dots), &used_lo);
      hi = std::stoll(w.substr(dots + 2), &used_hi);
      if (used_lo != dots || used_hi != w.size() - dots - 2) throw std::invalid_argument(w);
    } catch (const std::logic_error&) {
      throw UsageError("malformed window '" + w + "' (expected A..B)");
    }
    if (lo > hi) throw UsageError("empty window '" + w + "'");
    switch (group.kind()) {
      case GroupSpec::Kind::integers:
      case GroupSpec::Kind::cyclic:
        for (auto i = lo; i <= hi; ++i) out.push_back(group.from_int(i));
        break;
      case GroupSpec::Kind::lattice: {
        std::vector<std::int64_t> c(group.rank(), lo);
        while (true) {
          out.push_back({c});
          std::size_t k = 0;
          while (k < c.size() && c[k] == hi) c[k++] = lo;
          if (k == c.size()) break;
          ++c[k];
        }
        break;
      }
      case GroupSpec::Kind::table:
        throw UsageError("range window needs an integer group; use 'all' or a ';' list");
    }
  } else {
    std::istringstream in(w);
    for (std::string part; std::getline(in, part, ';');) out.push_back(group.parse(part));
  }
  std::set<GroupElement> uniq(out.begin(), out.end());
  return {uniq.begin(), uniq.end()};
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::pass: return exit_ok;
    case Status::fail: return exit_fail;
    case Status::undetermined: return exit_undetermined;
  }
  return exit_internal;
}

template <CoefficientRing R>
class Runner {
 public:
  Runner(const Options& opts, Graph graph, DegreeMap d, R ring, std::istream& in,
         std::ostream& out)
      : opts_(opts), alg_(std::move(graph), std::move(ring)), d_(std::move(d)), in_(in),
        out_(out) {}

  int run() {
    const auto& c = opts_.command;
    if (c == "nf") return unary([](const auto&, const auto& a) { return a; });
    if (c == "involve")
      return unary([](const auto& alg, const auto& a) { return alg.involution(a); });
    if (c == "mul") return mul();
    if (c == "decompose") return decompose();
    if (c == "xg") return xg();
    if (c == "epsilon") return epsilon_cmd();
    if (c == "localunits") return localunits();
    if (c == "check") return check();
    if (c == "frobenius") return frobenius();
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  using El = Element<R>;
  using Json = nlohmann::ordered_json;

  bool json() const { return opts_.output == "json"; }
  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  std::vector<std::string> expression_texts() {
    if (!opts_.exprs.empty()) return opts_.exprs;
    std::vector<std::string> out;
    for (std::string line; std::getline(in_, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    return out;
  }

  std::vector<std::pair<std::string, El>> expressions(std::size_t at_least = 1) {
    std::vector<std::pair<std::string, El>> out;
    for (auto& t : expression_texts()) {
      auto e = parse_element(alg_, t);
      out.emplace_back(std::move(t), std::move(e));
    }
    if (out.size() < at_least)
      throw UsageError(opts_.command + " needs " + std::to_string(at_least) +
                       " element expression(s) via --expr or stdin");
    return out;
  }

  GroupElement degree_arg() {
    if (!opts_.degree) throw UsageError(opts_.command + " needs -g <degree>");
    return d_.group().parse(*opts_.degree);
  }

  void require_bound() {
    if (opts_.bound < 1) throw UsageError("--bound must be at least 1");
  }

  std::size_t sample_count(std::size_t fallback) const {
    return opts_.samples ? opts_.samples : fallback;
  }

  template <class F>
  int unary(F f) {
    const auto xs = expressions();
    Json results = Json::array();
    for (const auto& [text, a] : xs) {
      const auto r = f(alg_, a);
      if (json())
        results.push_back({{"input", text}, {"result", alg_.render(r)}});
      else
        out_ << alg_.render(r) << "\n";
    }
    if (json()) emit({{"command", opts_.command}, {"results", results}});
    return exit_ok;
  }

  int mul() {
    const auto xs = expressions(2);
    El acc = xs.front().second;
    Json inputs = Json::array({xs.front().first});
    for (std::size_t i = 1; i < xs.size(); ++i) {
      acc = alg_.mul(acc, xs[i].second);
      inputs.push_back(xs[i].first);
    }
    if (json())
      emit({{"command", "mul"}, {"inputs", inputs}, {"result", alg_.render(acc)}});
    else
      out_ << alg_.render(acc) << "\n";
    return exit_ok;
  }

  int decompose() {
    const auto& group = d_.group();
    Json results = Json::array();
    for (const auto& [text, a] : expressions()) {
      Json parts = Json::array();
      for (const auto& [g, part] : lpa::decompose(a, d_).parts) {
        if (json())
          parts.push_back({{"degree", group.render(g)}, {"element", alg_.render(part)}});
        else
          out_ << "[" << group.render(g) << "] " << alg_.render(part) << "\n";
      }
      if (json()) results.push_back({{"input", text}, {"parts", parts}});
    }
    if (json()) emit({{"command", "decompose"}, {"results", results}});
    return exit_ok;
  }

  int xg() {
    require_bound();
    const auto g = degree_arg();
    const auto ms = enumerate_Xg(alg_, g, d_, opts_.bound);
    if (json()) {
      Json list = Json::array();
      for (const auto& m : ms) list.push_back(alg_.render(m));
      emit({{"command", "xg"},
            {"degree", d_.group().render(g)},
            {"bound", opts_.bound},
            {"monomials", list}});
    } else {
      for (const auto& m : ms) out_ << alg_.render(m) << "\n";
    }
    return exit_ok;
  }

  int epsilon_cmd() {
    require_bound();
    const auto g = degree_arg();
    const auto e = epsilon(alg_, g, d_, opts_.bound);
    Report rep;
    rep.property = "epsilon";
    rep.degree = d_.group().render(g);
    rep.bound = opts_.bound;
    rep.notes.push_back(std::string("minimal classes: ") + to_string(e.classes.verdict));
    if (e.present()) {
      rep.verdict = "PRESENT";
      rep.certificate.emplace_back("epsilon", alg_.render(*e.epsilon));
      rep.certificate.emplace_back("factorization", render_factorization(alg_, e.certificate));
      rep.notes.push_back("identity verified on " + std::to_string(e.identity_checked_on) +
                          " monomials");
    } else {
      rep.verdict = "ABSENT";
      rep.status = e.classes.verdict == ClassVerdict::bound_exhausted && e.failure.empty()
                       ? Status::undetermined
                       : Status::fail;
      rep.witness = e.absent_reason;
    }
    if (json()) {
      emit(to_json(rep));
    } else if (e.present()) {
      out_ << alg_.render(*e.epsilon) << "\n";
      out_ << "  factorization: " << render_factorization(alg_, e.certificate) << "\n";
      out_ << "  " << rep.notes.front() << " at bound " << opts_.bound << "\n";
    } else {
      out_ << "ABSENT: " << e.absent_reason << "\n";
    }
    return exit_code(rep.status);
  }

  int localunits() {
    Json results = Json::array();
    for (const auto& [text, s] : expressions()) {
      const auto u = local_units(alg_, s, d_);
      const std::string deg = d_.group().render(u.degree);
      if (json()) {
        results.push_back({{"input", text},
                           {"degree", deg},
                           {"left", alg_.render(u.left)},
                           {"left_factorization", render_factorization(alg_, u.left_certificate)},
                           {"right", alg_.render(u.right)},
                           {"right_factorization",
                            render_factorization(alg_, u.right_certificate)}});
      } else {
        out_ << "s = " << alg_.render(s) << "  (degree " << deg << ")\n";
        out_ << "  left  = " << alg_.render(u.left) << "\n";
        out_ << "  right = " << alg_.render(u.right) << "\n";
      }
    }
    if (json()) emit({{"command", "localunits"}, {"results", results}});
    return exit_ok;
  }

  /// Expressions if given, else seeded random homogeneous samples.
  std::vector<El> homogeneous_samples(std::size_t fallback) {
    std::vector<El> out;
    if (!opts_.exprs.empty()) {
      for (const auto& [t, e] : expressions()) out.push_back(e);
      return out;
    }
    ElementSampler<R> sampler(alg_, d_, std::max<std::size_t>(opts_.bound, 1), opts_.seed);
    for (std::size_t i = 0; i < sample_count(fallback); ++i)
      out.push_back(sampler.homogeneous(4));
    return out;
  }

  int check() {
    const auto& p = opts_.property;
    Report rep;
    if (p == "grading") {
      rep = check_grading_axiom(alg_, d_, opts_.bound);
    } else if (p == "symmetric") {
      rep = check_symmetric(alg_, d_, opts_.bound);
    } else if (p == "epsilon-strong") {
      require_bound();
      rep = check_epsilon_strong(alg_, d_, parse_window(opts_.window, d_.group(), opts_.bound),
                                 opts_.bound);
    } else if (p == "strong") {
      require_bound();
      rep = check_strongly_graded(alg_, d_, parse_window(opts_.window, d_.group(), opts_.bound),
                                  opts_.bound)
                .report;
    } else if (p == "nearly-epsilon") {
      rep = check_nearly_epsilon(alg_, d_, homogeneous_samples(50));
      if (opts_.exprs.empty()) rep.seed = opts_.seed;
    } else if (p == "nondegenerate") {
      rep = nondegenerate(homogeneous_samples(50));
      if (opts_.exprs.empty()) rep.seed = opts_.seed;
    } else {
      throw UsageError("unknown property '" + p +
                       "' (grading, symmetric, epsilon-strong, strong, nearly-epsilon, "
                       "nondegenerate)");
    }
    print(rep);
    return exit_code(rep.status);
  }

  Report nondegenerate(const std::vector<El>& samples) {
    Report rep;
    rep.property = "nondegenerate";
    std::size_t checked = 0;
    for (const auto& s : samples) {
      if (s.is_zero()) continue;
      const auto w = check_nondegenerate(alg_, s, d_);
      rep.certificate.emplace_back(alg_.render(s), "right " + alg_.render(w.right) + "; left " +
                                                       alg_.render(w.left));
      ++checked;
    }
    rep.verdict = "PASS";
    rep.notes.push_back(std::to_string(checked) + " nonzero samples witnessed");
    return rep;
  }

  int frobenius() {
    require_bound();
    Report rep;
    try {
      const auto sys = build_frobenius_system(alg_, d_, opts_.bound);
      ElementSampler<R> sampler(alg_, d_, opts_.bound, opts_.seed);
      std::vector<El> samples;
      for (std::size_t i = 0; i < sample_count(100); ++i) samples.push_back(sampler.any(6));
      std::vector<std::tuple<El, El, El>> triples;
      const auto e = d_.group().identity();
      for (std::size_t i = 0; i < opts_.triples; ++i) {
        auto t = sampler.homogeneous_of_degree(e, 3);
        auto a = sampler.any(4);
        auto t2 = sampler.homogeneous_of_degree(e, 3);
        triples.emplace_back(std::move(t), std::move(a), std::move(t2));
      }
      rep = verify_frobenius(alg_, sys, samples, triples);
    } catch (const FrobeniusError& err) {
      rep.property = "frobenius";
      rep.verdict = "FAIL";
      rep.status = Status::fail;
      rep.witness = err.what();
    }
    rep.bound = opts_.bound;
    rep.seed = opts_.seed;
    print(rep);
    return exit_code(rep.status);
  }

  void print(const Report& rep) {
    if (json())
      emit(to_json(rep));
    else
      out_ << render_text(rep);
  }

  const Options& opts_;
  LeavittAlgebra<R> alg_;
  DegreeMap d_;
  std::istream& in_;
  std::ostream& out_;
};

inline int dispatch(const Options& opts, std::istream& in, std::ostream& out) {
  const std::string graph_text = read_file(opts.graph_file);
  Graph graph;
  try {
    graph = parse_graph(graph_text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), opts.graph_file + ": " + e.what());
  }
  DegreeMap d = load_degrees(opts.degrees, graph);
  const auto& r = opts.ring;
  if (r == "z") return Runner<Integers>(opts, std::move(graph), std::move(d), {}, in, out).run();
  if (r == "q") return Runner<Rationals>(opts, std::move(graph), std::move(d), {}, in, out).run();
  if (r.rfind("z/", 0) == 0) {
    std::int64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoll(r.substr(2), &used);
      if (used != r.size() - 2) m = 0;
    } catch (const std::logic_error&) {
    }
    if (m < 2) throw UsageError("ring '" + r + "' needs a modulus of at least 2");
    return Runner<IntegersMod>(opts, std::move(graph), std::move(d), IntegersMod(m), in, out)
        .run();
  }
  throw UsageError("unknown ring '" + r + "' (expected z, q or z/N)");
}

/// Parses arguments and runs one command. Never throws.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options opts;
  CLI::App app{"Exact computation in Leavitt path algebras of directed graphs", "lpa"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--graph", opts.graph_file, "Graph description file")->required();
  app.add_option("--degrees", opts.degrees,
                 "Degree map file, 'canonical' (Z) or 'canonical:<Z|Z^k|Z/n>'")
      ->capture_default_str();
  app.add_option("--ring", opts.ring, "Coefficient ring: z, q or z/N")->capture_default_str();
  app.add_option("--bound", opts.bound, "Path length bound for X_g enumeration")
      ->capture_default_str();
  app.add_option("--window", opts.window, "Degree window: A..B, 'all' or g1;g2;...");
  app.add_option("--seed", opts.seed, "Seed for sampled elements")->capture_default_str();
  app.add_option("--output", opts.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("-e,--expr", opts.exprs, "Element expression (repeatable); else stdin lines")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"nf", "Normal form of each expression"},
      {"mul", "Product of the expressions, left to right"},
      {"involve", "Involution of each expression"},
      {"decompose", "Homogeneous components of each expression"},
      {"xg", "Normal-form monomials of degree g within the bound"},
      {"epsilon", "The local identity epsilon_g"},
      {"localunits", "Element-specific local units of each homogeneous expression"},
      {"check", "Check a grading property"},
      {"frobenius", "Build and verify the Frobenius system (finite group)"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&opts, name = std::string(s.name)] { opts.command = name; });
    const std::string n = s.name;
    if (n == "xg" || n == "epsilon")
      sub->add_option("-g,--degree", opts.degree, "Group element")->required();
    if (n == "check") {
      sub->add_option("-p,--property", opts.property,
                      "grading, symmetric, epsilon-strong, strong, nearly-epsilon, nondegenerate")
          ->required();
      sub->add_option("--samples", opts.samples, "Number of seeded samples");
    }
    if (n == "frobenius") {
      sub->add_option("--samples", opts.samples, "Number of seeded samples");
      sub->add_option("--triples", opts.triples, "Number of bimodule triples")
          ->capture_default_str();
    }
  }

  std::vector<const char*> argv{"lpa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    return dispatch(opts, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_no_input;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const GradingError& e) {
    err << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace lpa::cli
