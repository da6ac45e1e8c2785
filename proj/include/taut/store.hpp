#pragma once

#include "taut/relgen.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace taut {

// Append-only JSON-lines file of relation records, one record per line,
// indexed in memory by (g, d, degree). A record is stored once per
// (content-normalized polynomial, provenance) pair.
class RelationStore {
public:
    explicit RelationStore(std::string path);

    const std::string& path() const { return path_; }
    size_t size() const { return records_.size(); }
    const std::vector<RelationRecord>& records() const { return records_; }

    // Returns false (and writes nothing) for duplicates.
    bool append(const RelationRecord& record);
    size_t append_all(const std::vector<RelationRecord>& records);

    std::vector<const RelationRecord*> query(long g, int d, int degree) const;

private:
    std::string dedup_key(const RelationRecord& r) const;

    std::string path_;
    std::vector<RelationRecord> records_;
    std::map<std::tuple<long, int, int>, std::vector<size_t>> index_;
    std::map<std::string, size_t> keys_;
};

}  // namespace taut
