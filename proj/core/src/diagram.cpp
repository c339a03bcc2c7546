#include "hurwitz/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hurwitz/errors.hpp"

namespace hurwitz {

CoxeterDiagram::CoxeterDiagram(int rank) : rank_(rank) {
  if (rank < 1)
    fail(ErrorCode::InvalidDiagram, "rank must be at least 1, got " + std::to_string(rank));
  labels_.assign(static_cast<std::size_t>(rank) * rank, 2);
  assigned_.assign(labels_.size(), false);
  for (int i = 0; i < rank; ++i) labels_[static_cast<std::size_t>(i) * rank + i] = 1;
}

void CoxeterDiagram::check_index(int i) const {
  if (i < 1 || i > rank_)
    fail(ErrorCode::InvalidDiagram,
         "simple index " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
}

Label CoxeterDiagram::label(int i, int j) const {
  check_index(i);
  check_index(j);
  return labels_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)];
}

void CoxeterDiagram::set_label(int i, int j, Label m) {
  check_index(i);
  check_index(j);
  if (i == j)
    fail(ErrorCode::InvalidDiagram, "cannot set a diagonal label m(i,i)");
  if (m != kInfiniteBond && m < 2)
    fail(ErrorCode::InvalidDiagram, "label must be >= 2 or inf, got " + std::to_string(m));
  std::size_t a = static_cast<std::size_t>(i - 1) * rank_ + (j - 1);
  std::size_t b = static_cast<std::size_t>(j - 1) * rank_ + (i - 1);
  if (assigned_[a]) {
    if (labels_[a] != m)
      fail(ErrorCode::InvalidDiagram,
           "conflicting labels for pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    fail(ErrorCode::InvalidDiagram,
         "duplicate bond (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  labels_[a] = labels_[b] = m;
  assigned_[a] = assigned_[b] = true;
}

std::set<Label> CoxeterDiagram::finite_labels() const {
  std::set<Label> out;
  for (int i = 1; i <= rank_; ++i)
    for (int j = i + 1; j <= rank_; ++j)
      if (label(i, j) != kInfiniteBond) out.insert(label(i, j));
  return out;
}

ClassLabeling odd_components(const CoxeterDiagram& d) {
  int n = d.rank();
  std::vector<int> parent(n + 1);
  for (int i = 1; i <= n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Label m = d.label(i, j);
      if (m != kInfiniteBond && m >= 3 && m % 2 == 1) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  ClassLabeling out;
  out.class_of_simple.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int root = find(i);
    if (out.class_of_simple[root] == 0) out.class_of_simple[root] = ++out.class_count;
    out.class_of_simple[i] = out.class_of_simple[root];
  }
  return out;
}

CoxeterWord coxeter_word(const CoxeterDiagram& d, const std::vector<int>& permutation) {
  int n = d.rank();
  if (static_cast<int>(permutation.size()) != n)
    fail(ErrorCode::InvalidArgument,
         "permutation must have exactly " + std::to_string(n) + " entries");
  std::vector<bool> seen(n + 1, false);
  for (int v : permutation) {
    if (v < 1 || v > n || seen[v])
      fail(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
  return CoxeterWord{permutation, permutation};
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::string loc(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto flush_line = [&] {
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      flush_line();
      ++line;
      column = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
      // `;` separates statements like a newline would
      if (c == ';') flush_line();
      ++column;
      ++i;
    } else {
      int start_col = column;
      std::string word;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != ';' && text[i] != '#') {
        word += text[i];
        ++i;
        ++column;
      }
      current.push_back(Token{std::move(word), line, start_col});
    }
  }
  flush_line();
  return lines;
}

long parse_int(const Token& t) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    fail(ErrorCode::SyntaxError, "expected an integer, got '" + t.text + "'",
         loc(t.line, t.column));
  return value;
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  auto lines = tokenize(text);

  long rank = -1;
  struct Bond {
    long i, j, m;
    Token at;
  };
  std::vector<Bond> bonds;

  for (const auto& stmt : lines) {
    const Token& head = stmt[0];
    if (head.text == "rank") {
      if (stmt.size() != 2)
        fail(ErrorCode::SyntaxError, "expected: rank <n>", loc(head.line, head.column));
      if (rank >= 0)
        fail(ErrorCode::SyntaxError, "duplicate rank statement", loc(head.line, head.column));
      rank = parse_int(stmt[1]);
      if (rank < 1)
        fail(ErrorCode::InvalidDiagram, "rank must be at least 1",
             loc(stmt[1].line, stmt[1].column));
    } else if (head.text == "m") {
      if (stmt.size() != 4)
        fail(ErrorCode::SyntaxError, "expected: m <i> <j> <label>", loc(head.line, head.column));
      if (rank < 0)
        fail(ErrorCode::SyntaxError, "rank must be declared before bonds",
             loc(head.line, head.column));
      long i = parse_int(stmt[1]);
      long j = parse_int(stmt[2]);
      long m;
      if (stmt[3].text == "inf") {
        m = kInfiniteBond;
      } else {
        m = parse_int(stmt[3]);
        if (m < 2)
          fail(ErrorCode::InvalidDiagram, "label must be >= 2 or inf",
               loc(stmt[3].line, stmt[3].column));
      }
      bonds.push_back(Bond{i, j, m, head});
    } else {
      fail(ErrorCode::SyntaxError, "unknown statement '" + head.text + "'",
           loc(head.line, head.column));
    }
  }

  if (rank < 0) fail(ErrorCode::SyntaxError, "missing rank statement");

  CoxeterDiagram d(static_cast<int>(rank));
  for (const auto& b : bonds) {
    try {
      d.set_label(static_cast<int>(b.i), static_cast<int>(b.j), b.m);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), loc(b.at.line, b.at.column));
    }
  }
  return d;
}

}  // namespace hurwitz
