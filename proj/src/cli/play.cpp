#include <algorithm>
#include <cctype>
#include <iostream>

#include "guess/cli.hpp"

namespace guess::cli {

namespace {

bool is_natural(const std::string& s) {
  return !s.empty() && s.size() <= 19 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

int play(const std::vector<std::string>& guesser_refs, const Signature& sig, std::istream& in, std::ostream& out) {
  std::vector<Guesser> guessers;
  for (const auto& ref : guesser_refs) guessers.push_back(resolve_guesser(ref, sig));
  std::vector<GuessTrace> traces(guessers.size());
  std::vector<Nat> entries;

  auto show_traces = [&] {
    if (entries.empty()) {
      out << "no entries yet\n";
      return;
    }
    for (std::size_t g = 0; g < guessers.size(); ++g) out << guesser_refs[g] << ": " << traces[g].str() << "\n";
  };

  out << "enter natural numbers one per line; :trace shows the guesses so far, :quit ends\n";
  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == ":quit") break;
    if (line == ":trace") {
      show_traces();
      continue;
    }
    if (!is_natural(line)) {
      out << "not a natural number: " << line << "\n";
      continue;
    }
    entries.push_back(std::stoull(line));
    const FinitePrefix prefix(entries);
    out << "f(" << entries.size() - 1 << ")=" << entries.back();
    for (std::size_t g = 0; g < guessers.size(); ++g) {
      const int guess = guessers[g](prefix);
      traces[g].guesses.push_back(guess);
      traces[g].stable_from = stable_from(traces[g].guesses);
      out << "  " << guesser_refs[g] << "=" << guess;
    }
    out << "\n";
  }
  out << "\nsession over after " << entries.size() << " entries, prefix=" << to_string(FinitePrefix(entries)) << "\n";
  show_traces();
  return kOk;
}

}  // namespace guess::cli
