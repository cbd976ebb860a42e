#include "ybn/orbits/action.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "ybn/error.hpp"

namespace ybn::orbits {

std::uint64_t encode(const Word& w, std::size_t m) {
  std::uint64_t code = 0;
  for (auto x : w) code = code * m + x;
  return code;
}

Word decode(std::uint64_t code, std::size_t n, std::size_t m) {
  Word w(n);
  for (std::size_t i = n; i-- > 0;) {
    w[i] = static_cast<Letter>(code % m);
    code /= m;
  }
  return w;
}

Word parse_word(const std::string& digits) {
  Word w;
  for (char c : digits) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ',') continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("word letters must be digits: " + digits);
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

std::string word_string(const Word& w) {
  std::string out;
  bool wide = std::any_of(w.begin(), w.end(), [](Letter x) { return x > 9; });
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word act(const ybe::SetSolution& s, std::size_t k, const Word& w) {
  if (k < 1 || k + 1 > w.size())
    throw PositionOutOfRange("generator s_" + std::to_string(k) + " on a word of length " + std::to_string(w.size()));
  Word out = w;
  auto [a, b] = s(w[k - 1], w[k]);
  out[k - 1] = a;
  out[k] = b;
  return out;
}

std::vector<Word> orbit_words(const ybe::SetSolution& s, const Word& w) {
  const std::size_t m = s.size();
  std::unordered_set<std::uint64_t> seen{encode(w, m)};
  std::vector<Word> queue{w};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t k = 1; k < w.size(); ++k) {
      Word next = act(s, k, queue[h]);
      if (seen.insert(encode(next, m)).second) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

OrbitReport orbit(const ybe::SetSolution& s, const Word& w) {
  auto words = orbit_words(s, w);
  OrbitReport report;
  report.representative = words.front();
  report.size = words.size();
  auto cls = lambda_classify(s, w);
  report.lambda = cls.lambda;
  report.lambda_element = cls.element;
  return report;
}

Word psi(const ybe::Diagonal& d, std::size_t k, Letter a) {
  Word w(k);
  Letter x = a;
  for (std::size_t i = k; i-- > 0;) {
    w[i] = x;
    x = d.apply(x);
  }
  return w;
}

std::vector<PsiBlock> psi_factorization(const ybe::Diagonal& d, const Word& w) {
  std::vector<PsiBlock> blocks;
  std::size_t start = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    bool last = t + 1 == w.size() || w[t] != d.apply(w[t + 1]);
    if (last) {
      blocks.push_back({start, t + 1 - start, w[t]});
      start = t + 1;
    }
  }
  return blocks;
}

Letter tau_word(const ybe::SetSolution& s, const Word& w, std::size_t begin, std::size_t end, Letter x) {
  for (std::size_t t = begin; t < end; ++t) x = s.tau(w[t], x);
  return x;
}

Letter tau_word(const ybe::SetSolution& s, const Word& u, Letter x) { return tau_word(s, u, 0, u.size(), x); }

Letter sigma_word(const ybe::SetSolution& s, const Word& w, std::size_t begin, std::size_t end, Letter y) {
  for (std::size_t t = end; t-- > begin;) y = s.sigma(w[t], y);
  return y;
}

Letter sigma_word(const ybe::SetSolution& s, const Word& u, Letter y) { return sigma_word(s, u, 0, u.size(), y); }

namespace {

void require_block(const ybe::Diagonal& d, const Word& w, const PsiBlock& b) {
  if (b.length == 0 || b.start + b.length > w.size())
    throw MalformedBlocks("block span lies outside the word");
  if (w[b.start + b.length - 1] != b.base) throw MalformedBlocks("block base is not its last letter");
  for (std::size_t t = b.start; t + 1 < b.start + b.length; ++t)
    if (w[t] != d.apply(w[t + 1])) throw MalformedBlocks("span is not a Psi-word");
}

}  // namespace

Word exchange(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w, const PsiBlock& left,
              const PsiBlock& right) {
  require_block(d, w, left);
  require_block(d, w, right);
  if (left.start + left.length != right.start) throw MalformedBlocks("blocks are not adjacent");
  const std::size_t p = left.start, k = left.length, t = right.length;
  Letter first_of_right = w[right.start];  // D^{t-1}(y)
  Letter b = sigma_word(s, w, p, p + k, first_of_right);
  Letter moved_base = tau_word(s, w, right.start, right.start + t, left.base);
  Word out = w;
  Letter x = b;
  for (std::size_t i = 0; i < t; ++i) {
    out[p + i] = x;
    x = d.inverse[x];
  }
  Word tail = psi(d, k, moved_base);
  std::copy(tail.begin(), tail.end(), out.begin() + static_cast<long>(p + t));
  return out;
}

std::vector<std::size_t> exchange_moves(const PsiBlock& left, const PsiBlock& right) {
  std::vector<std::size_t> moves;
  const std::size_t p = left.start, k = left.length;
  for (std::size_t b = 0; b < right.length; ++b)
    for (std::size_t pos = p + k + b; pos-- > p + b;) moves.push_back(pos + 1);
  return moves;
}

Word apply_moves(const ybe::SetSolution& s, Word w, const std::vector<std::size_t>& moves) {
  for (auto k : moves) {
    if (k < 1 || k + 1 > w.size()) throw PositionOutOfRange("move outside the word");
    auto [a, b] = s(w[k - 1], w[k]);
    w[k - 1] = a;
    w[k] = b;
  }
  return w;
}

namespace {

// Condition (i, j) fails when block i, carried right past the blocks between, fuses with block j.
bool merge_condition_fails(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w,
                           const std::vector<PsiBlock>& blocks, std::size_t i, std::size_t j) {
  Letter carried = tau_word(s, w, blocks[i + 1].start, blocks[j].start, blocks[i].base);
  return d.power(blocks[j].base, static_cast<long>(blocks[j].length)) == carried;
}

}  // namespace

std::optional<Partition> is_lambda_element(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w) {
  auto blocks = psi_factorization(d, w);
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].length < blocks[i + 1].length) return std::nullopt;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (merge_condition_fails(s, d, w, blocks, i, j)) return std::nullopt;
  std::vector<std::uint32_t> parts;
  for (const auto& b : blocks) parts.push_back(static_cast<std::uint32_t>(b.length));
  return Partition(parts);
}

std::optional<Partition> is_lambda_element(const ybe::SetSolution& s, const Word& w) {
  return is_lambda_element(s, ybe::diagonal(s), w);
}

LambdaClass lambda_classify(const ybe::SetSolution& s, const ybe::Diagonal& d, const Word& w) {
  LambdaClass out;
  Word cur = w;
  auto run = [&](const PsiBlock& left, const PsiBlock& right) {
    auto mv = exchange_moves(left, right);
    cur = apply_moves(s, std::move(cur), mv);
    out.moves.insert(out.moves.end(), mv.begin(), mv.end());
  };
  const std::size_t guard = 4 * (w.size() + 1) * (w.size() + 1) * (w.size() + 1);
  for (std::size_t step = 0;; ++step) {
    if (step > guard) throw Error("lambda_classify did not terminate");
    auto blocks = psi_factorization(d, cur);
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      if (blocks[i].length < blocks[i + 1].length) {
        run(blocks[i], blocks[i + 1]);
        swapped = true;
        break;
      }
    }
    if (swapped) continue;
    bool merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j) {
        if (!merge_condition_fails(s, d, cur, blocks, i, j)) continue;
        PsiBlock moving = blocks[i];
        for (std::size_t t = i + 1; t < j; ++t) {
          PsiBlock next = blocks[t];
          run(moving, next);
          std::size_t p = moving.start;
          moving = PsiBlock{p + next.length, moving.length, cur[p + next.length + moving.length - 1]};
        }
        merged = true;
      }
    }
    if (!merged) break;
  }
  auto lambda = is_lambda_element(s, d, cur);
  if (!lambda) throw MalformedBlocks("classification ended on a word that is not a lambda-element");
  out.lambda = *lambda;
  out.element = cur;
  return out;
}

LambdaClass lambda_classify(const ybe::SetSolution& s, const Word& w) { return lambda_classify(s, ybe::diagonal(s), w); }

StabilizerReport stabilizer_report(const ybe::SetSolution& s, const Word& x) {
  StabilizerReport report;
  auto d = ybe::diagonal(s);
  auto lambda = is_lambda_element(s, d, x);
  if (!lambda) return report;
  report.expected_orbit_size = multinomial(*lambda);
  auto blocks = psi_factorization(d, x);
  report.young_fixes = true;
  for (const auto& b : blocks)
    for (std::size_t k = b.start + 1; k < b.start + b.length; ++k)
      if (act(s, k, x) != x) report.young_fixes = false;

  // Minimal coset representatives of the Young subgroup: one per arrangement of block labels.
  std::vector<std::uint32_t> labels;
  for (std::uint32_t i = 0; i < blocks.size(); ++i) labels.insert(labels.end(), blocks[i].length, i);
  std::vector<std::uint32_t> arrangement = labels;
  std::unordered_set<std::uint64_t> images;
  do {
    // Sorting the arrangement by adjacent swaps; replaying those swaps backwards sends x to the shuffle.
    std::vector<std::uint32_t> a = arrangement;
    std::vector<std::size_t> swaps;
    for (std::size_t pass = 0; pass < a.size(); ++pass)
      for (std::size_t k = 0; k + 1 < a.size(); ++k)
        if (a[k] > a[k + 1]) {
          std::swap(a[k], a[k + 1]);
          swaps.push_back(k + 1);
        }
    std::reverse(swaps.begin(), swaps.end());
    images.insert(encode(apply_moves(s, x, swaps), s.size()));
    ++report.transversal_size;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  report.distinct_images = images.size();
  return report;
}

bool stabilizer_check(const ybe::SetSolution& s, const Word& x) { return stabilizer_report(s, x).ok(); }

}  // namespace ybn::orbits
