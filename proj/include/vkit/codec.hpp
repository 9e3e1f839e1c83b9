#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vkit/gauss.hpp"
#include "vkit/planar.hpp"
#include "vkit/table.hpp"

namespace vkit {

enum class Format { Gauss, PD, Table, Corpus };

/// Line-oriented text tagged with its format; '#' starts a comment line.
struct RawDocument {
  Format format = Format::Gauss;
  std::string payload;
};

/// Whitespace-separated O<id><sign>, U<id><sign>, D<id> tokens.
SingularGaussCode parse_gauss(std::string_view text);
std::string format_gauss(const SingularGaussCode& code);
std::string format_token(const GaussToken& t);

/// Lines "<word> <value>", the empty word written as "()".
ActualityTable parse_table(std::string_view text);
std::string serialize_table(const ActualityTable& table);

struct CorpusRecord {
  std::string name;
  Format format = Format::Gauss;  // Gauss or PD
  SingularGaussCode gauss;        // for PD records: pd_to_gauss(pd)
  PlanarDiagram pd;

  /// Name of the diagram this one was derived from, or empty for a base.
  std::string parent() const;
  /// Move class of a derived record ("r1", "r2", "r3", "conj"), or empty.
  std::string move_class() const;
};

/// One record per line: "<name> gauss <tokens...>" or "<name> pd <X/P
/// vertices separated by ';'>".
std::vector<CorpusRecord> parse_corpus(std::string_view text);
std::string format_corpus_record(const CorpusRecord& r);

RawDocument read_document(const std::string& path, Format format);
void write_document(const std::string& path, const RawDocument& doc);

}  // namespace vkit
