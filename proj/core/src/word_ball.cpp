#include "valtree/word_ball.hpp"

#include <algorithm>
#include <unordered_map>

#include "valtree/error.hpp"

namespace valtree {

GeneratorSet GeneratorSet::symmetrize(const Field& field, std::size_t dim, const std::vector<Mat>& gens,
                                      const std::vector<std::string>& labels) {
  GeneratorSet out(field, dim);
  std::vector<std::string> keys;
  auto add = [&](const Mat& m, std::string label) {
    if (m.dim() != dim) raise(Errc::dimension_mismatch, "generator of dimension " + std::to_string(m.dim()));
    if (!(m.field() == field)) raise(Errc::incompatible_field, "generator over " + m.field().str());
    if (m.is_identity()) return;
    std::string k = m.key();
    if (std::find(keys.begin(), keys.end(), k) != keys.end()) return;
    keys.push_back(std::move(k));
    out.gens_.push_back(m);
    out.labels_.push_back(std::move(label));
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string label = i < labels.size() ? labels[i] : "g" + std::to_string(i + 1);
    add(gens[i], label);
    add(gens[i].inverse(), label + "^-1");
  }
  return out;
}

WordBall::WordBall(int radius, std::vector<BallElement> elems) : radius_(radius), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(), [](const BallElement& a, const BallElement& b) { return a.key < b.key; });
}

const BallElement* WordBall::find(const std::string& key) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), key,
                             [](const BallElement& e, const std::string& k) { return e.key < k; });
  return it != elems_.end() && it->key == key ? &*it : nullptr;
}

std::size_t WordBall::count_within(int r) const {
  return static_cast<std::size_t>(
      std::count_if(elems_.begin(), elems_.end(), [r](const BallElement& e) { return e.length <= r; }));
}

WordBall word_ball(const GeneratorSet& s, int radius, std::size_t cap) {
  if (radius < 0) raise(Errc::invalid_argument, "radius must be non-negative");
  std::vector<BallElement> all;
  std::unordered_map<std::string, std::size_t> seen;
  const Mat id = Mat::identity(s.field(), s.dim());
  all.push_back({id, 0, {}, id.key()});
  seen.emplace(all.back().key, 0);

  std::vector<std::size_t> frontier{0};
  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    // Expansion order is fixed by (frontier key order, generator index), so
    // the recorded shortest words are reproducible.
    std::sort(frontier.begin(), frontier.end(),
              [&](std::size_t a, std::size_t b) { return all[a].key < all[b].key; });
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (std::size_t gi = 0; gi < s.size(); ++gi) {
        Mat prod = all[idx].element * s.gens()[gi];
        std::string key = prod.key();
        if (seen.contains(key)) continue;
        if (all.size() >= cap)
          raise(Errc::ball_too_large, "word ball exceeds " + std::to_string(cap) + " elements at radius " +
                                          std::to_string(r));
        std::vector<int> word = all[idx].word;
        word.push_back(static_cast<int>(gi));
        seen.emplace(key, all.size());
        all.push_back({std::move(prod), r, std::move(word), std::move(key)});
        next.push_back(all.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return WordBall(radius, std::move(all));
}

std::string word_str(const GeneratorSet& s, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '*';
    out += s.labels()[static_cast<std::size_t>(word[i])];
  }
  return out;
}

}  // namespace valtree
