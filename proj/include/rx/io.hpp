#ifndef RX_IO_HPP
#define RX_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "rx/engine.hpp"

namespace rx {

enum class InputMode { Divisorial, Degenerations };

struct PsiPieceDoc {
    RatVec grad;
    Rat constant;
    bool operator==(const PsiPieceDoc&) const = default;
};
struct PsiEntryDoc {
    std::string marker;
    std::vector<PsiPieceDoc> pieces;
    bool operator==(const PsiEntryDoc&) const = default;
};
struct DeltaDoc {
    std::string label;
    std::vector<RatVec> vertices;
    bool operator==(const DeltaDoc&) const = default;
};

/// The interchange document. Rationals travel as strings ("p" or "p/q") and
/// parsing is strict: unknown fields, floats in rational position, and "1/0"
/// are all rejected with a JSON-path diagnostic.
struct InputDocument {
    InputMode mode = InputMode::Divisorial;
    std::string name;
    int dim = 0;
    std::vector<RatVec> box_vertices;
    std::vector<PsiEntryDoc> psi;            // divisorial mode
    std::optional<RatVec> dh_barycenter;     // degenerations mode
    std::vector<DeltaDoc> degenerations;     // degenerations mode
    bool operator==(const InputDocument&) const = default;
};

InputDocument parse_input(const std::string& text);
std::string serialize_input(const InputDocument& doc);

/// Builds the engine input (hulls the box, assembles psi / delta specs).
RxInput to_engine_input(const InputDocument& doc);

/// Deterministic JSON rendering of a report; all rationals exact strings,
/// R_decimal a derived 20-significant-digit decimal.
std::string serialize_report(const std::string& name, const RxReport& rep);

/// Correctly rounded decimal expansion with 20 significant digits.
std::string decimal20(const Rat& x);

/// Diagram of a 2-d box: the polygon plus markers at bc, the
/// origin, and q. Byte-identical output for identical input.
std::string emit_svg(const Polytope& box, const RatVec& bc, const RatVec& q);

} // namespace rx

#endif
