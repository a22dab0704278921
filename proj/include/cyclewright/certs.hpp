#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclewright/digraph.hpp"

namespace cw {

/// True iff no arc joins two equal colours. Throws DomainMismatch when the
/// colouring does not cover exactly V(D) or a colour lies outside the palette.
bool verify_coloring(const Digraph& d, const Coloring& c);

/// The trusted checker for subdivision witnesses.
bool verify_subdivision(const Digraph& d, const SubdivisionWitness& w);
/// Same, with a reason on failure.
std::optional<std::string> subdivision_defect(const Digraph& d, const SubdivisionWitness& w);

/// Equal up to rotation and reversal of the traversal.
bool equivalent_specs(const OrientedCycleSpec& a, const OrientedCycleSpec& b);

enum class CertKind { Coloring, Witness, Diagnostic };

struct Diagnostic {
    std::string lemma;
    std::string message;
    Digraph instance;
};

struct Certificate {
    std::string theorem;
    std::map<std::string, int> params;
    CertKind kind = CertKind::Coloring;
    int bound = 0;
    std::optional<Coloring> coloring;
    std::optional<SubdivisionWitness> witness;
    std::optional<Diagnostic> diagnostic;
    /// How the result was obtained; in-memory only.
    std::string route;

    static Certificate make_coloring(std::string theorem, std::map<std::string, int> params, int bound, Coloring c,
                                     std::string route = {});
    static Certificate make_witness(std::string theorem, std::map<std::string, int> params, int bound,
                                    SubdivisionWitness w, std::string route = {});
    static Certificate make_diagnostic(std::string theorem, std::map<std::string, int> params, int bound,
                                       Diagnostic diag);

    bool is_coloring() const { return kind == CertKind::Coloring; }
    bool is_witness() const { return kind == CertKind::Witness; }
};

/// Colouring certificates: proper and palette within bound. Witness
/// certificates: the trusted checker accepts. Diagnostics never verify.
bool verify_certificate(const Digraph& d, const Certificate& c);
/// Also checks that a witness realises `target` (up to rotation/reversal).
bool verify_certificate(const Digraph& d, const Certificate& c, const OrientedCycleSpec& target);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

std::string spec_to_string(const OrientedCycleSpec& s);

}  // namespace cw
