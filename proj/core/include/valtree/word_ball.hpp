#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valtree/mat.hpp"

namespace valtree {

/// A symmetric generating set: closed under inverses, identity excluded,
/// all of one dimension and field.
class GeneratorSet {
 public:
  /// Adds missing inverses (labelled "<label>^-1"), drops identities and
  /// duplicates. `dim` and `field` describe the ambient group even when no
  /// generator survives.
  static GeneratorSet symmetrize(const Field& field, std::size_t dim, const std::vector<Mat>& gens,
                                 const std::vector<std::string>& labels = {});

  const std::vector<Mat>& gens() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return gens_.size(); }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }

 private:
  GeneratorSet(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}
  Field field_;
  std::size_t dim_;
  std::vector<Mat> gens_;
  std::vector<std::string> labels_;
};

struct BallElement {
  Mat element;
  int length;
  /// A shortest word, as generator indices, producing the element.
  std::vector<int> word;
  std::string key;
};

/// All group elements of word length <= radius, sorted by canonical key.
class WordBall {
 public:
  WordBall(int radius, std::vector<BallElement> elems);

  int radius() const { return radius_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<BallElement>& elements() const { return elems_; }
  /// Lookup by canonical key.
  const BallElement* find(const std::string& key) const;
  /// Number of elements with length <= r.
  std::size_t count_within(int r) const;

 private:
  int radius_;
  std::vector<BallElement> elems_;
};

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// Breadth-first enumeration on the Cayley graph with exact deduplication by
/// canonical key. Throws Errc::ball_too_large past `cap` elements.
WordBall word_ball(const GeneratorSet& s, int radius, std::size_t cap = kDefaultBallCap);

std::string word_str(const GeneratorSet& s, const std::vector<int>& word);

}  // namespace valtree
