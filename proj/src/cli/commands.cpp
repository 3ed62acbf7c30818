#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "guess/adversary.hpp"
#include "guess/cli.hpp"
#include "guess/error.hpp"
#include "guess/semantics.hpp"
#include "guess/seqspec.hpp"
#include "guess/synth.hpp"
#include "guess/syntax.hpp"
#include "guess/topology.hpp"

namespace guess::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Signature session_signature(const std::string& sig_file) {
  Signature sig = Signature::standard();
  if (!sig_file.empty()) {
    std::istringstream in(read_file(sig_file));
    load_signature(in, cli_registry(), sig);
  }
  return sig;
}

TopologySpec read_table(const std::string& path) {
  std::istringstream in(read_file(path));
  return TopologySpec::parse(in);
}

Assignment parse_assignment(const std::string& text) {
  Assignment s;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad assignment '" + item + "', expected var=n");
    const std::string value = item.substr(eq + 1);
    if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit))
      throw UsageError("bad assignment value '" + value + "'");
    s.set(item.substr(0, eq), std::stoull(value));
  }
  return s;
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json trace_json(const GuessTrace& t) {
  return {{"trace", t.guesses}, {"stable_from", optional_json(t.stable_from)}, {"final", t.final_guess()}};
}

void print_adversary(const AdversaryRun& run, bool as_json, std::ostream& out) {
  if (as_json) {
    json status = run.trace.completed()
                      ? json{{"kind", "Completed"}, {"flips", run.trace.flips.size()}}
                      : json{{"kind", "BudgetExhausted"}, {"phase", run.trace.phase}, {"steps", run.trace.steps}};
    out << json{{"flips", run.trace.flips},
                {"guesses", run.trace.guesses},
                {"status", status},
                {"prefix", prefix_spec(run.prefix)}}
               .dump()
        << "\n";
  } else {
    out << run.trace.str() << "\n" << "prefix=" << prefix_spec(run.prefix) << "\n";
  }
}

struct SynthOutput {
  std::string label;
  Formula formula;
};

int emit_sentences(const std::vector<SynthOutput>& outputs, const std::string& out_prefix, std::ostream& out) {
  for (const auto& o : outputs) {
    const std::string text = print(o.formula);
    const std::string header = "# " + o.label + " (" + to_string(classify_sentence(o.formula)) + ")";
    if (out_prefix.empty()) {
      out << header << "\n" << text << "\n";
    } else {
      const std::string path = out_prefix + "." + o.label + ".lg";
      std::ofstream file(path);
      if (!file) throw UsageError("cannot write '" + path + "'");
      file << header << "\n" << text << "\n";
      out << "wrote " << path << "\n";
    }
  }
  return kOk;
}

}  // namespace

HostRegistry cli_registry() {
  HostRegistry r = HostRegistry::builtin();
  r.add_seq_function("initial_segment", guesser_host(initial_segment_guesser()));
  r.add_seq_function("last_is_5", guesser_host(last_entry_guesser(5)));
  Signature s = Signature::standard();
  const auto fam = constants_family("g");
  register_family(s, fam);
  r.add_seq_function("mu_const", mu_prime_host(overguesser_from_sigma2(sigma2_from_countable_family(fam, s), s)));
  return r;
}

std::vector<std::string> builtin_guesser_names() {
  return {"contains-zero", "parity", "const-0", "const-1", "initial-segment", "last-is:<n>", "delta2:<symbol>"};
}

Guesser resolve_guesser(const std::string& ref, const Signature& sig) {
  if (ref == "contains-zero") return contains_zero_guesser();
  if (ref == "parity") return parity_guesser();
  if (ref == "const-0") return constant_guesser(0);
  if (ref == "const-1") return constant_guesser(1);
  if (ref == "initial-segment") return initial_segment_guesser();
  if (ref.rfind("last-is:", 0) == 0) {
    const std::string v = ref.substr(8);
    if (v.empty() || !std::all_of(v.begin(), v.end(), ::isdigit)) throw UsageError("bad guesser '" + ref + "'");
    return last_entry_guesser(std::stoull(v));
  }
  if (ref.rfind("delta2:", 0) == 0) return guesser_from_delta2(sentences_from_guesser(ref.substr(7), sig), sig);
  throw UsageError("unknown guesser '" + ref + "'");
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guessers, overguessers and adversaries for sets of infinite sequences", "guess"};
  app.require_subcommand(1);

  std::string sig_file;
  bool as_json = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--sig", sig_file, "Signature file (fn/pred/seqfn lines)");
    sub->add_flag("--json", as_json, "Structured output");
  };

  std::string file, seq_spec, assign_text;
  std::optional<Nat> bound;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a sentence in M_f");
  eval_cmd->add_option("file", file, "Sentence file")->required();
  eval_cmd->add_option("--seq", seq_spec, "Sequence spec")->required();
  eval_cmd->add_option("--assign", assign_text, "Assignment, e.g. x=3,y=0");
  eval_cmd->add_option("--bound", bound, "Quantifier bound (approximation)");
  common(eval_cmd);

  std::string guesser_ref, pi2_file, sigma2_file;
  std::vector<std::string> tables;
  std::size_t horizon = 20;
  auto* guess_cmd = app.add_subcommand("guess", "Trace a guesser along a sequence");
  guess_cmd->add_option("guesser", guesser_ref, "Guesser name");
  guess_cmd->add_option("--pi2", pi2_file, "Pi2 sentence file of a Delta2 pair");
  guess_cmd->add_option("--sigma2", sigma2_file, "Sigma2 sentence file of a Delta2 pair");
  guess_cmd->add_option("--tables", tables, "Topology tables for the set and its complement")->expected(2);
  guess_cmd->add_option("--seq", seq_spec, "Sequence spec")->required();
  guess_cmd->add_option("--horizon", horizon, "Last index k of the traced prefixes f(0..k)")->check(CLI::PositiveNumber);
  common(guess_cmd);

  auto* mu_cmd = app.add_subcommand("mu", "Overguesser values of a Sigma2 sentence along a sequence");
  mu_cmd->add_option("file", file, "Sigma2 sentence file")->required();
  mu_cmd->add_option("--seq", seq_spec, "Sequence spec")->required();
  mu_cmd->add_option("--horizon", horizon, "Last index k of the traced prefixes f(0..k)")->check(CLI::PositiveNumber);
  common(mu_cmd);

  std::string kind, extenders = "inf-zeros";
  std::size_t flips = 10, budget = 1000;
  auto* adv_cmd = app.add_subcommand("adversary", "Run an adversary against a guesser");
  adv_cmd->add_option("kind", kind, "diagonal | permutation | cantor")
      ->required()
      ->check(CLI::IsMember({"diagonal", "permutation", "cantor"}));
  adv_cmd->add_option("--guesser", guesser_ref, "Guesser name")->required();
  adv_cmd->add_option("--flips", flips, "Target number of flips")->check(CLI::PositiveNumber);
  adv_cmd->add_option("--budget", budget, "Entries per phase")->check(CLI::PositiveNumber);
  adv_cmd->add_option("--extenders", extenders, "inf-zeros | contains-zero")
      ->check(CLI::IsMember({"inf-zeros", "contains-zero"}));
  common(adv_cmd);

  std::string source, out_prefix;
  std::vector<std::string> inputs;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize sentences");
  synth_cmd->add_option("source", source, "guesser | overguesser | family | topology")
      ->required()
      ->check(CLI::IsMember({"guesser", "overguesser", "family", "topology"}));
  synth_cmd->add_option("inputs", inputs, "Symbol, registry key or table files")->required();
  synth_cmd->add_option("--out", out_prefix, "Write <prefix>.<label>.lg files");
  common(synth_cmd);

  std::vector<std::string> play_refs;
  auto* play_cmd = app.add_subcommand("play", "Enter a sequence by hand and watch guessers");
  play_cmd->add_option("guessers", play_refs, "Guesser names (default contains-zero)");
  common(play_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Signature sig = session_signature(sig_file);

    if (*eval_cmd) {
      const Formula f = parse_formula(read_file(file), sig);
      auto o = parse_sequence_spec(seq_spec);
      const Assignment s = parse_assignment(assign_text);
      if (is_quantifier_free(f)) {
        const auto r = eval_qf(f, o, s, sig);
        const auto mq = r.queries.max_queried();
        if (as_json) {
          out << json{{"value", r.value}, {"max_queried", mq ? json(*mq) : json(nullptr)},
                      {"queried", r.queries.queried()}}
                     .dump()
              << "\n";
        } else {
          out << (r.value ? "true" : "false") << " (max_queried=" << (mq ? std::to_string(*mq) : "none") << ")\n";
        }
        return kOk;
      }
      if (!bound) {
        err << "error: quantified sentence needs --bound B\n";
        return kUsage;
      }
      const bool v = eval_bounded(f, o, s, sig, *bound);
      err << "warning: quantifiers range over 0.." << *bound << " only; the value is an approximation\n";
      if (as_json)
        out << json{{"value", v}, {"bounded", true}, {"bound", *bound}}.dump() << "\n";
      else
        out << (v ? "true" : "false") << " (bounded)\n";
      return kOk;
    }

    if (*guess_cmd) {
      const int sources = !guesser_ref.empty() + (!pi2_file.empty() || !sigma2_file.empty()) + !tables.empty();
      if (sources != 1) throw UsageError("give exactly one of: a guesser name, --pi2/--sigma2, --tables");
      std::optional<Guesser> g;
      if (!guesser_ref.empty()) {
        g = resolve_guesser(guesser_ref, sig);
      } else if (!tables.empty()) {
        g = guesser_from_delta2(delta2_from_topology(read_table(tables[0]), read_table(tables[1]), sig), sig);
      } else {
        if (pi2_file.empty() || sigma2_file.empty()) throw UsageError("--pi2 and --sigma2 go together");
        const Delta2Spec spec{Pi2Sentence::from_formula(parse_formula(read_file(pi2_file), sig)),
                              Sigma2Sentence::from_formula(parse_formula(read_file(sigma2_file), sig))};
        g = guesser_from_delta2(spec, sig);
      }
      auto o = parse_sequence_spec(seq_spec);
      const auto t = guess_trace(*g, o, horizon);
      if (as_json)
        out << trace_json(t).dump() << "\n";
      else
        out << t.str() << "\n";
      return kOk;
    }

    if (*mu_cmd) {
      const auto s2 = Sigma2Sentence::from_formula(parse_formula(read_file(file), sig));
      auto o = parse_sequence_spec(seq_spec);
      std::vector<std::string> values;
      for (std::size_t k = 0; k <= horizon; ++k) values.push_back(mu_from_sigma2(s2, prefix_of(o, k), sig).str());
      if (as_json) {
        out << json{{"mu", values}, {"final", values.back()}}.dump() << "\n";
      } else {
        out << "mu=";
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
        out << " final=" << values.back() << "\n";
      }
      return kOk;
    }

    if (*adv_cmd) {
      const Guesser g = resolve_guesser(guesser_ref, sig);
      AdversaryRun run;
      if (kind == "diagonal") {
        const auto ext = extenders == "inf-zeros" ? infinitely_many_zeros_extensions() : contains_zero_extensions();
        try {
          run = diagonalize(g, ext, flips, budget);
        } catch (const ExtensionUnavailable& e) {
          err << "density violation: " << e.what() << "\n";
          return kDensityViolation;
        }
      } else if (kind == "permutation") {
        run = permutation_adversary(g, flips, budget);
      } else {
        run = cantor_adversary(g, flips, budget);
      }
      print_adversary(run, as_json, out);
      return run.trace.completed() ? kOk : kBudgetExhausted;
    }

    if (*synth_cmd) {
      auto want_inputs = [&](std::size_t n) {
        if (inputs.size() != n)
          throw UsageError("synth " + source + " takes " + std::to_string(n) + " input(s)");
      };
      if (source == "guesser") {
        want_inputs(1);
        const auto d = sentences_from_guesser(inputs[0], sig);
        return emit_sentences({{"pi2", d.pi2.formula()}, {"sigma2", d.sigma2.formula()}}, out_prefix, out);
      }
      if (source == "overguesser") {
        want_inputs(1);
        const auto registry = cli_registry();
        const SeqHost* host = registry.seq_function(inputs[0]);
        if (!host) throw UsageError("unknown sequence function key '" + inputs[0] + "'");
        sig.add_seq_function("Mu", *host, inputs[0]);
        return emit_sentences({{"sigma2", sigma2_from_overguesser("Mu", sig).formula()}}, out_prefix, out);
      }
      if (source == "family") {
        want_inputs(1);
        const auto registry = cli_registry();
        const auto* entry = registry.function(inputs[0]);
        if (!entry || (entry->arity && *entry->arity != 2))
          throw UsageError("'" + inputs[0] + "' is not a binary function key");
        auto host = entry->host;
        const CountableFamily fam{"g", [host](Nat m, Nat n) { return host(std::vector<Nat>{m, n}); }, inputs[0]};
        register_family(sig, fam);
        return emit_sentences({{"sigma2", sigma2_from_countable_family(fam, sig).formula()}}, out_prefix, out);
      }
      want_inputs(2);
      const auto d = delta2_from_topology(read_table(inputs[0]), read_table(inputs[1]), sig);
      return emit_sentences({{"pi2", d.pi2.formula()}, {"sigma2", d.sigma2.formula()}}, out_prefix, out);
    }

    if (*play_cmd) {
      if (play_refs.empty()) play_refs.push_back("contains-zero");
      return play(play_refs, sig, in, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SignatureError& e) {
    err << "signature error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace guess::cli
