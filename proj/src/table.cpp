#include "vkit/table.hpp"

#include "vkit/error.hpp"

namespace vkit {

void ActualityTable::insert(const ChordDiagram& d, InvariantValue value) {
  if (d.degree() > degree_) degree_ = d.degree();
  if (kind_ && *kind_ != value.kind()) {
    throw Error(ErrorCode::MixedValueKinds, "entry '" + d.word() + "' differs in kind from the table");
  }
  if (!entries_.emplace(d.word(), std::move(value)).second) {
    throw Error(ErrorCode::DuplicateKey, "'" + d.word() + "'");
  }
  kind_ = entries_.begin()->second.kind();
}

const InvariantValue& ActualityTable::lookup(const std::string& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) throw Error(ErrorCode::LookupMiss, "no entry for '" + word + "'");
  return it->second;
}

bool ActualityTable::complete() const {
  for (int d = 0; d <= degree_; ++d) {
    for (const auto& cd : enumerate(d)) {
      if (!contains(cd.word())) return false;
    }
  }
  return true;
}

}  // namespace vkit
