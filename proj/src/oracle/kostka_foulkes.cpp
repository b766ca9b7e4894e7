#include <algorithm>
#include <map>

#include "green/oracle.hpp"

namespace green::oracle {

namespace {

// Fills the letters 1..weight.size() in increasing order; letter v occupies a
// horizontal strip added to the shape filled so far.
void place_letter(std::size_t letter, const Partition& shape, const Partition& weight,
                  std::vector<std::vector<int>>& rows, std::vector<SSYT>& out) {
  if (letter == weight.size()) {
    for (std::size_t r = 0; r < shape.size(); ++r)
      if (static_cast<int>(rows[r].size()) != shape[r]) return;
    out.push_back({shape, weight, rows});
    return;
  }
  const int value = static_cast<int>(letter) + 1;
  // Choose how many copies go in each row, top to bottom.
  auto distribute = [&](auto&& self, std::size_t row, int remaining) -> void {
    if (row == shape.size()) {
      if (remaining == 0) place_letter(letter + 1, shape, weight, rows, out);
      return;
    }
    const int filled = static_cast<int>(rows[row].size());
    // Column strictness: a cell in row r must sit under a filled cell of row r-1
    // holding a smaller letter (cells already present are all smaller).
    int cap = shape[row] - filled;
    if (row > 0) cap = std::min(cap, static_cast<int>(rows[row - 1].size()) - filled);
    for (int k = std::min(cap, remaining); k >= 0; --k) {
      if (row > 0 && k > 0) {
        // The cells above the new ones must hold letters < value.
        bool ok = true;
        for (int c = filled; c < filled + k && ok; ++c) ok = rows[row - 1][c] < value;
        if (!ok) continue;
      }
      rows[row].insert(rows[row].end(), k, value);
      self(self, row + 1, remaining - k);
      rows[row].resize(filled);
    }
  };
  distribute(distribute, 0, weight[letter]);
}

}  // namespace

std::vector<SSYT> semistandard_tableaux(const Partition& shape, const Partition& weight) {
  std::vector<SSYT> out;
  if (partition_size(shape) != partition_size(weight)) return out;
  std::vector<std::vector<int>> rows(shape.size());
  place_letter(0, shape, weight, rows, out);
  return out;
}

std::vector<int> reading_word(const SSYT& t) {
  std::vector<int> word;
  for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row) word.insert(word.end(), row->begin(), row->end());
  return word;
}

int charge(std::vector<int> word) {
  int total = 0;
  while (!word.empty()) {
    // Extract one standard subword: find 1 scanning leftwards from the right
    // end, then 2, 3, ... continuing leftwards cyclically. The index rises by
    // one each time the scan wraps around.
    const int top = *std::max_element(word.begin(), word.end());
    std::vector<std::size_t> picked;
    std::size_t pos = word.size();  // one past the scan start
    int index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      bool found = false;
      for (std::size_t step = 0; step < word.size(); ++step) {
        // Position to inspect: pos-1, pos-2, ..., wrapping to the right end.
        const bool wrapped = step >= pos;
        const std::size_t at = wrapped ? word.size() - 1 - (step - pos) : pos - 1 - step;
        if (word[at] != letter || std::find(picked.begin(), picked.end(), at) != picked.end()) continue;
        if (wrapped && letter > 1) ++index;
        total += index;
        picked.push_back(at);
        pos = at;
        found = true;
        break;
      }
      if (!found) break;  // content is a partition, so the subword ends here
    }
    std::sort(picked.rbegin(), picked.rend());
    for (std::size_t at : picked) word.erase(word.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return total;
}

LaurentPoly kostka_foulkes(const Partition& shape, const Partition& weight) {
  LaurentPoly out;
  for (const auto& t : semistandard_tableaux(shape, weight)) out += LaurentPoly::t_power(charge(reading_word(t)));
  return out;
}

}  // namespace green::oracle
