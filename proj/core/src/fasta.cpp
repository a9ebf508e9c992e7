#include "motifdfa/fasta.hpp"

#include <algorithm>
#include <istream>

#include "motifdfa/error.hpp"

namespace motifdfa {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string header_id(const std::string& header) {
    const auto begin = std::find_if_not(header.begin() + 1, header.end(), is_space);
    const auto end = std::find_if(begin, header.end(), is_space);
    return {begin, end};
}

}  // namespace

bool FastaReader::next(FastaRecord& record) {
    std::string line;
    if (!have_header_) {
        while (std::getline(in_, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty()) {
                continue;
            }
            if (line.front() != '>') {
                throw FormatError(line_, "sequence data before the first '>' header");
            }
            pending_header_ = line;
            have_header_ = true;
            break;
        }
        if (!have_header_) {
            return false;
        }
    }

    record.id = header_id(pending_header_);
    record.sequence.clear();
    have_header_ = false;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '>') {
            pending_header_ = line;
            have_header_ = true;
            break;
        }
        record.sequence += line;
    }
    return true;
}

std::vector<FastaRecord> read_fasta(std::istream& in) {
    std::vector<FastaRecord> out;
    FastaReader reader(in);
    FastaRecord record;
    while (reader.next(record)) {
        out.push_back(record);
    }
    return out;
}

}  // namespace motifdfa
