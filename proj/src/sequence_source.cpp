#include "seqlab/sequence_source.hpp"

namespace seqlab {

BitString SequenceSource::prefix(std::size_t n) const {
  BitString::Builder b(n);
  for (std::size_t i = 1; i <= n; ++i) b.push_back(bit_at(i));
  return std::move(b).build();
}

KeyValueRecord ConstantSource::descriptor() const {
  KeyValueRecord r;
  r.set("kind", "constant").set("bit", value_ ? "1" : "0");
  return r;
}

}  // namespace seqlab
