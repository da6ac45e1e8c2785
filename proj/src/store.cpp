#include "taut/store.hpp"

#include <fstream>
#include <stdexcept>

namespace taut {

RelationStore::RelationStore(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in.is_open())
        return;  // fresh store
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto parsed = [&]() -> RelationRecord {
            try {
                return RelationRecord::from_json(Json::parse(line));
            } catch (const std::exception& e) {
                throw std::runtime_error(path_ + ":" + std::to_string(lineno) +
                                         ": bad relation record: " + e.what());
            }
        };
        RelationRecord rec = parsed();
        const std::string key = dedup_key(rec);
        if (keys_.count(key))
            continue;
        keys_[key] = records_.size();
        index_[{rec.g, rec.d, rec.degree}].push_back(records_.size());
        records_.push_back(std::move(rec));
    }
}

std::string RelationStore::dedup_key(const RelationRecord& r) const {
    return kappa_poly_to_json(r.poly).dump() + "|" + r.provenance.dump() + "|" +
           schema_name(r.schema) + "|" + std::to_string(r.g) + "|" + std::to_string(r.d);
}

bool RelationStore::append(const RelationRecord& record) {
    const std::string key = dedup_key(record);
    if (keys_.count(key))
        return false;
    std::ofstream out(path_, std::ios::app);
    if (!out.is_open())
        throw std::runtime_error("cannot open store file " + path_);
    out << record.to_json().dump() << "\n";
    if (!out)
        throw std::runtime_error("write to store file " + path_ + " failed");
    keys_[key] = records_.size();
    index_[{record.g, record.d, record.degree}].push_back(records_.size());
    records_.push_back(record);
    return true;
}

size_t RelationStore::append_all(const std::vector<RelationRecord>& records) {
    size_t added = 0;
    for (const auto& r : records)
        if (append(r))
            ++added;
    return added;
}

std::vector<const RelationRecord*> RelationStore::query(long g, int d, int degree) const {
    std::vector<const RelationRecord*> out;
    auto it = index_.find({g, d, degree});
    if (it == index_.end())
        return out;
    for (size_t i : it->second)
        out.push_back(&records_[i]);
    return out;
}

}  // namespace taut
