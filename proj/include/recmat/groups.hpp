#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "recmat/presentation.hpp"

namespace recmat::groups {

enum class GroupTag { GammaL, GammaZ, Triangular };

/// Word in the group generators and their inverses. Alphabets:
/// GammaL a,b,c,d; GammaZ a,b,c; Triangular (lower Beeblebrox) p,q,r for
/// L1,L2,L3.
struct GroupWord {
    GroupTag group = GroupTag::GammaL;
    std::vector<std::pair<char, int>> letters;  // (generator, exponent +-1)

    std::string str() const;
};

/// Parses "b d^-1 c a^-1" style text.
GroupWord parse_word(GroupTag group, const std::string& text);

/// Product of the generator presentations (inverses from the catalog),
/// minimized. UnknownGeneratorError for symbols outside the alphabet.
Presentation evaluate_word(const GroupWord& w);

struct RelationCertificate {
    bool holds = false;
    ZeroCertificate certificate;  // of evaluate_word(w) - Id
};

RelationCertificate verify_relation(const GroupWord& w);

struct EnumerationCaps {
    int max_len_bound = 10;     // refuse longer searches
    int fingerprint_depth = 4;  // window depth for candidate detection
};

/// All cyclically reduced relators of length <= max_len, deduplicated up to
/// cyclic rotation and inversion. Candidates are found by exact window
/// fingerprints and then certified with verify_relation.
std::vector<GroupWord> enumerate_relations(GroupTag group, int max_len,
                                           const EnumerationCaps& caps = {});

/// Formal rational combination of words in the eight symbols A..D and their
/// inverses (free algebra N of the Gamma_L machinery). A word is stored as a
/// string with uppercase letters for generators and lowercase for inverses.
struct RelationPoly {
    std::map<std::string, mpq_class> terms;

    static RelationPoly monomial(const std::string& word, mpq_class coeff = 1);
    static RelationPoly one();

    RelationPoly add(const RelationPoly& o) const;
    RelationPoly sub(const RelationPoly& o) const;
    RelationPoly mul(const RelationPoly& o) const;
    RelationPoly scaled(const mpq_class& c) const;
    bool is_zero() const { return terms.empty(); }
    /// Two monomials with opposite-sign coefficients (the u v^-1 - w x^-1 shape).
    bool is_signed_pair() const;
    std::string str() const;

    bool operator==(const RelationPoly& o) const { return terms == o.terms; }
    bool operator<(const RelationPoly& o) const { return terms < o.terms; }
};

/// Letterwise substitution of the 2x2 block table for the shift maps on the
/// normalized generators, multiplied out blockwise; the four entries are
/// returned with zeros dropped and duplicates removed. Images of relations
/// are again relations.
std::vector<RelationPoly> mu1_expand(const RelationPoly& r);

/// Evaluates a relation polynomial in the recurrence-matrix algebra by
/// substituting the normalized Gamma_L generators.
Presentation evaluate_relation_poly(const RelationPoly& r);

struct Prop52Report {
    struct Item {
        std::string name;
        bool pass = false;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

/// The commutation and braiding relations of the triangular generators, plus
/// the exact free-abelian window checks at the 4x4 level.
Prop52Report prop52_checks();

}  // namespace recmat::groups
