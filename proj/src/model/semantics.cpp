#include "polita/errors.hpp"
#include "polita/model.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace polita {

Configuration initial_configuration(const PolITA& a) {
  return {a.initial, std::vector<Rational>(static_cast<std::size_t>(a.clocks), Rational(0))};
}

Configuration time_step(const PolITA& a, const Configuration& c, const Rational& d) {
  if (sgn(d) < 0) throw DomainError("time_step: negative delay " + to_string(d));
  Configuration out = c;
  out.valuation.at(static_cast<std::size_t>(a.level(c.state) - 1)) += d;
  return out;
}

std::vector<Rational> apply_update(const std::vector<Poly>& update, const std::vector<Rational>& valuation) {
  std::vector<Rational> out;
  out.reserve(update.size());
  for (const auto& rhs : update) out.push_back(rhs.evaluate(valuation));
  return out;
}

bool satisfies(const Guard& g, const std::vector<Rational>& valuation) {
  return std::all_of(g.begin(), g.end(),
                     [&](const Constraint& c) { return holds(c.rel, sign(c.poly.evaluate(valuation))); });
}

DiscreteOutcome discrete_step(const PolITA& a, const Configuration& c, std::size_t transition) {
  const Transition& t = a.transitions.at(transition);
  if (t.source != c.state) throw DomainError("discrete_step: the transition does not leave the current state");
  DiscreteOutcome out;
  for (std::size_t i = 0; i < t.guard.size(); ++i) {
    if (!holds(t.guard[i].rel, sign(t.guard[i].poly.evaluate(c.valuation)))) {
      out.failed_conjunct = i;
      return out;
    }
  }
  out.next = Configuration{t.target, apply_update(effective_update(a, t), c.valuation)};
  return out;
}

// ============================================================================
// Timed words
// ============================================================================

std::vector<TimedLetter> parse_timed_word(std::string_view text) {
  std::vector<TimedLetter> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  for (skip(); i < text.size(); skip()) {
    if (text[i] != '(') throw ParseError("timed word: expected '(' at offset " + std::to_string(i));
    const std::size_t comma = text.find(',', i);
    const std::size_t close = text.find(')', i);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
      throw ParseError("timed word: expected '(label,time)' at offset " + std::to_string(i));
    const std::string_view label = trim(text.substr(i + 1, comma - i - 1));
    if (label.empty()) throw ParseError("timed word: empty label at offset " + std::to_string(i));
    out.push_back({std::string(label), parse_rational(trim(text.substr(comma + 1, close - comma - 1)))});
    i = close + 1;
  }
  return out;
}

std::string to_string(const std::vector<TimedLetter>& word) {
  std::string out;
  for (const auto& l : word) out += "(" + l.label + "," + to_string(l.time) + ")";
  return out;
}

// ============================================================================
// Word membership
// ============================================================================

namespace {

struct ConfigLess {
  bool operator()(const Configuration& x, const Configuration& y) const {
    if (x.state != y.state) return x.state < y.state;
    for (std::size_t i = 0; i < x.valuation.size(); ++i) {
      const int c = cmp(x.valuation[i], y.valuation[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

// Configurations are explored in layers. Layer 2i holds the configurations at
// the instant of letter i (time 0 for i = 0) after reading it; layer 2i+1 the
// configurations at the instant of letter i+1, before reading it. Silent
// moves stay within a layer.
class WordSearch {
 public:
  WordSearch(const PolITA& a, const std::vector<TimedLetter>& word, const SimulationOptions& options)
      : a_(a), word_(word), options_(options), seen_(2 * word.size() + 1) {}

  SimulationResult run() {
    SimulationResult result;
    std::vector<std::size_t> layer{add(0, initial_configuration(a_), kNone)};
    for (std::size_t layer_index = 0;; ++layer_index) {
      layer = close_silent(layer_index, layer);
      if (truncated_) break;
      if (layer_index == 2 * word_.size()) {
        for (std::size_t n : layer)
          if (a_.states[static_cast<std::size_t>(nodes_[n].config.state)].final) {
            result.accepted = true;
            result.run = trace(n);
            break;
          }
        break;
      }
      layer = advance(layer_index, layer);
    }
    result.truncated = truncated_ && !result.accepted;
    result.expansions = expansions_;
    return result;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    Configuration config;
    std::size_t parent;
  };

  // Index of a new node, or kNone when the configuration was already seen in that layer.
  std::size_t add(std::size_t layer, Configuration c, std::size_t parent) {
    if (!seen_[layer].insert(c).second) return kNone;
    nodes_.push_back({std::move(c), parent});
    return nodes_.size() - 1;
  }

  std::vector<std::size_t> close_silent(std::size_t layer, std::vector<std::size_t> frontier) {
    std::vector<std::size_t> all;
    std::deque<std::size_t> queue;
    for (std::size_t n : frontier)
      if (n != kNone) queue.push_back(n);
    while (!queue.empty()) {
      if (++expansions_ > options_.max_expansions) {
        truncated_ = true;
        return all;
      }
      const std::size_t n = queue.front();
      queue.pop_front();
      all.push_back(n);
      for (std::size_t t : a_.outgoing(nodes_[n].config.state)) {
        if (a_.transitions[t].label != kSilent) continue;
        auto step = discrete_step(a_, nodes_[n].config, t);
        if (!step.fired()) continue;
        const std::size_t m = add(layer, std::move(*step.next), n);
        if (m != kNone) queue.push_back(m);
      }
    }
    return all;
  }

  std::vector<std::size_t> advance(std::size_t layer, const std::vector<std::size_t>& frontier) {
    const std::size_t letter = layer / 2;
    std::vector<std::size_t> next;
    for (std::size_t n : frontier) {
      if (layer % 2 == 0) {
        const Rational now = letter == 0 ? Rational(0) : word_[letter - 1].time;
        const std::size_t m = add(layer + 1, time_step(a_, nodes_[n].config, word_[letter].time - now), n);
        if (m != kNone) next.push_back(m);
        continue;
      }
      for (std::size_t t : a_.outgoing(nodes_[n].config.state)) {
        if (a_.transitions[t].label != word_[letter].label) continue;
        auto step = discrete_step(a_, nodes_[n].config, t);
        if (!step.fired()) continue;
        const std::size_t m = add(layer + 1, std::move(*step.next), n);
        if (m != kNone) next.push_back(m);
      }
    }
    return next;
  }

  std::vector<Configuration> trace(std::size_t n) const {
    std::vector<Configuration> out;
    for (; n != kNone; n = nodes_[n].parent) out.push_back(nodes_[n].config);
    std::reverse(out.begin(), out.end());
    return out;
  }

  const PolITA& a_;
  const std::vector<TimedLetter>& word_;
  SimulationOptions options_;
  std::vector<std::set<Configuration, ConfigLess>> seen_;
  std::vector<Node> nodes_;
  std::size_t expansions_ = 0;
  bool truncated_ = false;
};

}  // namespace

SimulationResult run_timed_word(const PolITA& a, const std::vector<TimedLetter>& word, const SimulationOptions& options) {
  Rational previous(0);
  for (const auto& l : word) {
    if (l.time < previous) throw DomainError("run_timed_word: letter times must be nondecreasing and start at 0 or later");
    if (l.label == kSilent) throw DomainError("run_timed_word: letters cannot be silent");
    previous = l.time;
  }
  return WordSearch(a, word, options).run();
}

}  // namespace polita
