#include "ans/alphabet.hpp"

#include <algorithm>
#include <set>

#include "ans/errors.hpp"

namespace ans {

Alphabet::Alphabet(std::vector<std::string> symbols, int arity)
    : base_(std::move(symbols)), arity_(arity) {
  if (base_.empty()) throw InvalidInput("alphabet must have at least one symbol");
  if (arity_ < 1) throw InvalidInput("alphabet arity must be >= 1");
  std::set<std::string> seen;
  for (const auto& s : base_) {
    if (s.empty()) throw InvalidInput("empty symbol name");
    if (s == "#") throw InvalidInput("'#' is reserved as the pad symbol");
    if (s.find('|') != std::string::npos)
      throw InvalidInput("symbol name may not contain '|': " + s);
    if (!seen.insert(s).second) throw InvalidInput("duplicate symbol: " + s);
  }
  std::size_t radix = base_.size() + 1;
  std::size_t n = 1;
  for (int t = 0; t < arity_; ++t) {
    if (n > (1u << 24) / radix) throw InvalidInput("alphabet too large");
    n *= radix;
  }
  letter_count_ = n - 1;
}

SymbolIdx Alphabet::track(Letter l, int track) const {
  std::size_t radix = base_.size() + 1;
  std::size_t div = 1;
  for (int t = arity_ - 1; t > track; --t) div *= radix;
  return static_cast<SymbolIdx>((l / div) % radix) - 1;
}

std::vector<SymbolIdx> Alphabet::digits(Letter l) const {
  std::vector<SymbolIdx> out(static_cast<std::size_t>(arity_));
  std::size_t radix = base_.size() + 1;
  std::size_t code = l;
  for (int t = arity_ - 1; t >= 0; --t) {
    out[static_cast<std::size_t>(t)] = static_cast<SymbolIdx>(code % radix) - 1;
    code /= radix;
  }
  return out;
}

Letter Alphabet::make_letter(std::span<const SymbolIdx> digits) const {
  std::size_t radix = base_.size() + 1;
  std::size_t code = 0;
  for (SymbolIdx d : digits) code = code * radix + static_cast<std::size_t>(d + 1);
  if (code == 0) throw InvalidInput("the all-pad tuple is not a letter");
  return static_cast<Letter>(code);
}

std::optional<SymbolIdx> Alphabet::find_symbol(const std::string& name) const {
  auto it = std::find(base_.begin(), base_.end(), name);
  if (it == base_.end()) return std::nullopt;
  return static_cast<SymbolIdx>(it - base_.begin());
}

std::string Alphabet::letter_name(Letter l) const {
  std::string out;
  for (int t = 0; t < arity_; ++t) {
    if (t > 0) out += '|';
    SymbolIdx s = track(l, t);
    out += s == kPad ? "#" : base_[static_cast<std::size_t>(s)];
  }
  return out;
}

std::optional<Letter> Alphabet::parse_letter(const std::string& name) const {
  std::vector<SymbolIdx> digits;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = name.find('|', pos);
    std::string part = name.substr(pos, bar == std::string::npos ? bar : bar - pos);
    if (part == "#") {
      digits.push_back(kPad);
    } else {
      auto s = find_symbol(part);
      if (!s) return std::nullopt;
      digits.push_back(*s);
    }
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  if (static_cast<int>(digits.size()) != arity_) return std::nullopt;
  bool all_pad = std::all_of(digits.begin(), digits.end(),
                             [](SymbolIdx d) { return d == kPad; });
  if (all_pad) return std::nullopt;
  return make_letter(digits);
}

}  // namespace ans
