#include <sstream>
#include <stdexcept>

#include "guess/cli.hpp"

namespace guess::cli {

std::optional<std::size_t> stable_from(const std::vector<int>& guesses) {
  if (guesses.size() < 2) return std::nullopt;
  std::size_t m = guesses.size() - 1;
  while (m > 1 && guesses[m - 1] == guesses.back()) --m;
  return m;
}

GuessTrace guess_trace(const Guesser& g, SequenceOracle& o, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
  GuessTrace t;
  std::vector<Nat> entries;
  for (std::size_t k = 0; k <= horizon; ++k) {
    entries.push_back(o.query(k));
    t.guesses.push_back(g(FinitePrefix(entries)));
  }
  t.stable_from = stable_from(t.guesses);
  return t;
}

std::string GuessTrace::str() const {
  std::ostringstream os;
  os << "trace=";
  for (std::size_t i = 0; i < guesses.size(); ++i) os << (i ? "," : "") << guesses[i];
  os << " stable_from=";
  if (stable_from)
    os << *stable_from;
  else
    os << "none";
  if (!guesses.empty()) os << " final=" << final_guess();
  return os.str();
}

}  // namespace guess::cli
