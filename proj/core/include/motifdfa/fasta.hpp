#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace motifdfa {

struct FastaRecord {
    std::string id;
    std::string sequence;

    bool operator==(const FastaRecord&) const = default;
};

/// Pulls FASTA records one at a time. The id is the header text up to the
/// first whitespace; sequence lines are concatenated without line breaks.
class FastaReader {
public:
    explicit FastaReader(std::istream& in) : in_(in) {}

    /// Returns false at end of input. Throws FormatError when non-empty
    /// content precedes the first header.
    bool next(FastaRecord& record);

private:
    std::istream& in_;
    std::string pending_header_;
    bool have_header_ = false;
    std::size_t line_ = 0;
};

std::vector<FastaRecord> read_fasta(std::istream& in);

}  // namespace motifdfa
