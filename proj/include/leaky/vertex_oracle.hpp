#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leaky/rational.hpp"

namespace leaky {

/// Local data at one cover vertex: its genus, the leak, the signed local
/// degrees (inbound positive, outbound negative) and the psi exponent of each
/// slot. Slots are kept sorted jointly by (degree, psi) so that keys compare
/// independently of the order in which half-edges were listed.
struct VertexKey {
    int genus = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> degrees;
    std::vector<int> psi;

    int valence() const { return static_cast<int>(degrees.size()); }

    /// Sorts the (degree, psi) slots jointly.
    VertexKey& canonicalize();
    /// Throws std::invalid_argument when the degree or dimension constraint fails.
    void validate() const;
    std::string str() const;

    friend bool operator==(const VertexKey&, const VertexKey&) = default;
    friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

class MissingVertexData : public std::runtime_error {
public:
    explicit MissingVertexData(VertexKey key)
        : std::runtime_error("no vertex multiplicity for " + key.str()), key_(std::move(key)) {}
    const VertexKey& key() const { return key_; }

private:
    VertexKey key_;
};

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex multiplicities supplied as data, keyed by canonical VertexKey.
class FixtureTable {
public:
    /// Rejects a second, different value for an existing key.
    void insert(VertexKey key, const Rational& value);
    /// Entries of `other` replace entries here.
    void merge_override(const FixtureTable& other);
    const Rational* find(const VertexKey& key) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<VertexKey, Rational>& entries() const { return entries_; }

private:
    std::map<VertexKey, Rational> entries_;
};

/// JSON array of {"genus","k","degrees","psi","value"} records. Whitespace-only
/// input is an empty table.
FixtureTable parse_fixtures(std::string_view json_text);
FixtureTable load_fixtures(const std::filesystem::path& path);
/// The table compiled into the library.
FixtureTable default_fixtures();
std::string_view default_fixtures_json();

/// Multinomial (val-3)! / prod e_i!, the genus-0 vertex multiplicity.
Rational genus0_vertex_mult(const std::vector<int>& psi);

/// Supplies vertex multiplicities. Implementations must be safe for
/// concurrent const calls.
class VertexOracle {
public:
    virtual ~VertexOracle() = default;
    virtual Rational vertex_mult(const VertexKey& key) const = 0;
};

/// Closed form in genus 0, table lookup otherwise.
class FixtureOracle : public VertexOracle {
public:
    FixtureOracle() = default;
    explicit FixtureOracle(FixtureTable table) : table_(std::move(table)) {}

    /// Throws MissingVertexData for genus >= 1 keys absent from the table.
    Rational vertex_mult(const VertexKey& key) const override;
    const FixtureTable& table() const { return table_; }

private:
    FixtureTable table_;
};

}  // namespace leaky
