#ifndef STANLEY_IO_HPP
#define STANLEY_IO_HPP

/**
 * Text formats.
 *
 * Ideal files start with `n=<int>`; every further nonempty line is one
 * generator written `x1*x3*x4` or `1 3 4`. A line holding only `1` is the
 * unit generator. Complex files start with `complex n=<int>` and list one
 * facet per line in the same syntax (there `1` is the vertex 1). `{}` is the
 * empty set in either. `#` starts a comment.
 *
 * Certificates:
 *   SDR                      VIOLATOR             PARTITION k=<cap>
 *   facet 1 2 3 drop 3       1 2                  interval 1 2 -> 1 2 3
 *   ...                      ...                  ...
 * Sets print as ascending space-separated indices.
 */

#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "stanley/collapse.hpp"
#include "stanley/complexes.hpp"
#include "stanley/interval.hpp"

namespace stanley {

enum class InputKind { Ideal, Complex };

struct ParsedInput {
    InputKind kind;
    unsigned n;
    std::vector<VertexSet> sets;
};

/// Reads either file kind; throws ParseError naming the line.
ParsedInput parse_input(std::istream& in);

/// Complex files are turned into their complement ideal.
MonomialIdeal read_ideal(std::istream& in);
/// Ideal files are turned into their complement complex.
SimplicialComplex read_complex(std::istream& in);

std::string format_set(VertexSet s);
/// x1*x2*x5, or 1 for the empty set.
std::string format_monomial(VertexSet s);

void write_ideal(std::ostream& out, const MonomialIdeal& ideal);
void write_complex(std::ostream& out, const SimplicialComplex& complex);
void write_certificate(std::ostream& out, const CollapseCertificate& certificate);
void write_partition(std::ostream& out, const IntervalPartition& partition);

using Certificate = std::variant<CollapseCertificate, IntervalPartition>;

/// Skips everything before the first SDR / VIOLATOR / PARTITION header.
Certificate parse_certificate(std::istream& in);

/// Flat `key = value` record in insertion order, nested through dotted keys.
class Record {
public:
    void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    template <typename Int>
        requires std::is_integral_v<Int>
    void add(std::string key, Int value)
    {
        add(std::move(key), std::to_string(value));
    }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
    void write(std::ostream& out) const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

void add_certificate(Record& record, const std::string& prefix, const CollapseCertificate& certificate);
void add_partition(Record& record, const std::string& prefix, const IntervalPartition& partition);

}  // namespace stanley

#endif
