#include "leaky/vertex_oracle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace leaky {

VertexKey& VertexKey::canonicalize() {
    std::vector<std::pair<std::int64_t, int>> slots;
    slots.reserve(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        slots.emplace_back(degrees[i], i < psi.size() ? psi[i] : 0);
    }
    std::sort(slots.begin(), slots.end());
    degrees.clear();
    psi.clear();
    for (const auto& [d, e] : slots) {
        degrees.push_back(d);
        psi.push_back(e);
    }
    return *this;
}

void VertexKey::validate() const {
    if (genus < 0) {
        throw std::invalid_argument("vertex key with negative genus: " + str());
    }
    if (degrees.size() != psi.size()) {
        throw std::invalid_argument("vertex key degrees/psi length mismatch: " + str());
    }
    const int val = valence();
    if (2 * genus - 2 + val <= 0) {
        throw std::invalid_argument("unstable vertex key: " + str());
    }
    const std::int64_t degree = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
    if (degree != k * (2 * genus - 2 + val)) {
        throw std::invalid_argument("vertex key violates leaky balance: " + str());
    }
    for (int e : psi) {
        if (e < 0) {
            throw std::invalid_argument("vertex key with negative psi exponent: " + str());
        }
    }
    const int psi_sum = std::accumulate(psi.begin(), psi.end(), 0);
    if (psi_sum != val - 3 + 2 * genus) {
        throw std::invalid_argument("vertex key psi total must equal val-3+2g: " + str());
    }
}

std::string VertexKey::str() const {
    std::ostringstream os;
    os << "{genus=" << genus << ", k=" << k << ", degrees=[";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        os << (i ? "," : "") << degrees[i];
    }
    os << "], psi=[";
    for (std::size_t i = 0; i < psi.size(); ++i) {
        os << (i ? "," : "") << psi[i];
    }
    os << "]}";
    return os.str();
}

void FixtureTable::insert(VertexKey key, const Rational& value) {
    key.canonicalize();
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && it->second != value) {
        throw FixtureError("conflicting fixture values for " + key.str() + ": " + it->second.str() + " vs " +
                           value.str());
    }
}

void FixtureTable::merge_override(const FixtureTable& other) {
    for (const auto& [key, value] : other.entries_) {
        entries_[key] = value;
    }
}

const Rational* FixtureTable::find(const VertexKey& key) const {
    VertexKey canonical = key;
    canonical.canonicalize();
    auto it = entries_.find(canonical);
    return it == entries_.end() ? nullptr : &it->second;
}

FixtureTable parse_fixtures(std::string_view json_text) {
    FixtureTable table;
    if (std::all_of(json_text.begin(), json_text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
        return table;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        throw FixtureError(std::string("fixture JSON parse error: ") + err.what());
    }
    if (!doc.is_array()) {
        throw FixtureError("fixture file must hold a JSON array");
    }
    for (const auto& rec : doc) {
        try {
            VertexKey key;
            key.genus = rec.at("genus").get<int>();
            key.k = rec.at("k").get<std::int64_t>();
            key.degrees = rec.at("degrees").get<std::vector<std::int64_t>>();
            key.psi = rec.at("psi").get<std::vector<int>>();
            const auto& raw = rec.at("value");
            const Rational value = raw.is_string() ? Rational::parse(raw.get<std::string>())
                                                   : Rational(raw.get<std::int64_t>());
            key.validate();
            table.insert(std::move(key), value);
        } catch (const nlohmann::json::exception& err) {
            throw FixtureError(std::string("malformed fixture record ") + rec.dump() + ": " + err.what());
        } catch (const std::invalid_argument& err) {
            throw FixtureError(std::string("invalid fixture record ") + rec.dump() + ": " + err.what());
        }
    }
    return table;
}

FixtureTable load_fixtures(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FixtureError("cannot open fixture file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_fixtures(buffer.str());
}

FixtureTable default_fixtures() { return parse_fixtures(default_fixtures_json()); }

Rational genus0_vertex_mult(const std::vector<int>& psi) {
    const int val = static_cast<int>(psi.size());
    std::vector<std::int64_t> parts(psi.begin(), psi.end());
    return Rational(multinomial(val - 3, parts));
}

Rational FixtureOracle::vertex_mult(const VertexKey& key) const {
    key.validate();
    if (key.genus == 0) {
        return genus0_vertex_mult(key.psi);
    }
    if (const Rational* value = table_.find(key)) {
        return *value;
    }
    VertexKey canonical = key;
    throw MissingVertexData(canonical.canonicalize());
}

}  // namespace leaky
