#include "bsmaps/words.hpp"

#include <cctype>
#include <tuple>

#include "bsmaps/errors.hpp"

namespace bsmaps {

std::string NamedPoint::to_string() const {
  return (kind == BaseKind::P ? "P" : "Q") + std::to_string(index);
}

std::string GroupWord::letters_string() const {
  std::string out;
  for (int l : letters) out += "T" + std::to_string(l);
  return out;
}

std::string GroupWord::to_string() const { return letters_string() + base.to_string(); }

GroupWord GroupWord::parse(std::string_view text) {
  GroupWord w;
  bool have_base = false;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '*'))
      ++pos;
  };
  auto number = [&]() -> int {
    skip();
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (begin == pos) throw ParseError("expected an index in group word '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(begin, pos - begin)));
  };
  skip();
  while (pos < text.size()) {
    if (have_base) throw ParseError("trailing text after base point in '" + std::string(text) + "'");
    const char c = text[pos++];
    if (c == 'T') {
      w.letters.push_back(number());
    } else if (c == 'P' || c == 'Q') {
      w.base = {c == 'P' ? BaseKind::P : BaseKind::Q, number()};
      have_base = true;
    } else {
      throw ParseError("unexpected character in group word '" + std::string(text) + "'");
    }
    skip();
  }
  if (!have_base) throw ParseError("group word '" + std::string(text) + "' has no base point");
  return w;
}

bool GroupWord::shortlex_less(const GroupWord& a, const GroupWord& b) {
  return std::forward_as_tuple(a.letters.size(), a.letters, a.base) <
         std::forward_as_tuple(b.letters.size(), b.letters, b.base);
}

GroupWord prepend(int letter, const GroupWord& w) { return prepend(std::vector<int>{letter}, w); }

GroupWord prepend(const std::vector<int>& outer, const GroupWord& w) {
  GroupWord out;
  out.letters = outer;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.base = w.base;
  return out;
}

}  // namespace bsmaps
