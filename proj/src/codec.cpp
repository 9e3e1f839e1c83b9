#include "vkit/codec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "vkit/error.hpp"

namespace vkit {

namespace {

bool is_comment_or_blank(std::string_view line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string_view::npos || line[p] == '#';
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) words.push_back(w);
  }
  return words;
}

int parse_id(std::string_view digits, std::string_view token) {
  if (digits.empty() || digits.size() > 9) throw Error(ErrorCode::MalformedToken, "'" + std::string(token) + "'");
  int id = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::MalformedToken, "'" + std::string(token) + "'");
    id = id * 10 + (c - '0');
  }
  return id;
}

GaussToken parse_token(std::string_view w) {
  if (w.size() < 2) throw Error(ErrorCode::MalformedToken, "'" + std::string(w) + "'");
  const char head = w.front();
  if (head == 'D') return {Visit::Double, parse_id(w.substr(1), w), 0};
  if (head != 'O' && head != 'U') throw Error(ErrorCode::MalformedToken, "'" + std::string(w) + "'");
  const char tail = w.back();
  if (tail != '+' && tail != '-') throw Error(ErrorCode::MalformedToken, "missing sign in '" + std::string(w) + "'");
  return {head == 'O' ? Visit::Over : Visit::Under, parse_id(w.substr(1, w.size() - 2), w), tail == '+' ? 1 : -1};
}

}  // namespace

SingularGaussCode parse_gauss(std::string_view text) {
  std::vector<GaussToken> tokens;
  for (const auto& w : split_words(text)) tokens.push_back(parse_token(w));
  return SingularGaussCode(std::move(tokens));
}

std::string format_token(const GaussToken& t) {
  switch (t.kind) {
    case Visit::Double: return "D" + std::to_string(t.id);
    case Visit::Over: return "O" + std::to_string(t.id) + (t.sign > 0 ? "+" : "-");
    case Visit::Under: return "U" + std::to_string(t.id) + (t.sign > 0 ? "+" : "-");
  }
  return {};
}

std::string format_gauss(const SingularGaussCode& code) {
  std::string out;
  for (const auto& t : code.tokens()) {
    if (!out.empty()) out += ' ';
    out += format_token(t);
  }
  return out;
}

ActualityTable parse_table(std::string_view text) {
  ActualityTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    std::string word, value, extra;
    if (!(ls >> word >> value) || (ls >> extra)) {
      throw Error(ErrorCode::MalformedToken, "table line needs '<word> <value>': '" + line + "'");
    }
    if (word == "()") word.clear();
    if (!is_canonical(word)) throw Error(ErrorCode::NonCanonicalWord, "'" + word + "'");
    table.insert(ChordDiagram(word), parse_value(value));
  }
  return table;
}

std::string serialize_table(const ActualityTable& table) {
  std::string out;
  // Group by degree so the file reads 0, AA, AABB, ...
  for (int d = 0; d <= table.degree(); ++d) {
    for (const auto& [word, value] : table.entries()) {
      if (static_cast<int>(word.size()) != 2 * d) continue;
      out += word.empty() ? "()" : word;
      out += ' ';
      if (value.kind() == ValueKind::Formal) {
        const auto& f = value.formal();
        if (f.size() != 1 || f.begin()->second != 1) {
          throw Error(ErrorCode::MixedValueKinds, "table files hold single formal basis terms only");
        }
        out += "e[" + f.begin()->first + "]";
      } else {
        out += value.numeric().str();
      }
      out += '\n';
    }
  }
  return out;
}

std::string CorpusRecord::parent() const {
  const auto slash = name.rfind('/');
  return slash == std::string::npos ? std::string() : name.substr(0, slash);
}

std::string CorpusRecord::move_class() const {
  const auto slash = name.rfind('/');
  if (slash == std::string::npos) return {};
  const auto dot = name.find('.', slash);
  return name.substr(slash + 1, dot == std::string::npos ? std::string::npos : dot - slash - 1);
}

std::vector<CorpusRecord> parse_corpus(std::string_view text) {
  std::vector<CorpusRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    CorpusRecord r;
    std::string tag;
    if (!(ls >> r.name >> tag)) {
      throw Error(ErrorCode::MalformedToken, "corpus line " + std::to_string(line_no) + " needs a name and a tag");
    }
    std::string rest;
    std::getline(ls, rest);
    try {
      if (tag == "gauss") {
        r.format = Format::Gauss;
        r.gauss = parse_gauss(rest);
      } else if (tag == "pd") {
        r.format = Format::PD;
        r.pd = parse_pd(rest);
        r.gauss = pd_to_gauss(r.pd);
      } else {
        throw Error(ErrorCode::MalformedToken, "unknown format tag '" + tag + "'");
      }
    } catch (const Error& e) {
      throw Error(e.code(), "corpus line " + std::to_string(line_no) + " (" + r.name + "): " + e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string format_corpus_record(const CorpusRecord& r) {
  if (r.format == Format::PD) return r.name + " pd " + format_pd(r.pd, " ; ");
  return r.name + " gauss " + format_gauss(r.gauss);
}

RawDocument read_document(const std::string& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return RawDocument{format, buf.str()};
}

void write_document(const std::string& path, const RawDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << doc.payload;
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace vkit
