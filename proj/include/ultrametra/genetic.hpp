#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ultrametra/bigint.hpp"

namespace ultra {

/// Codon over {C, A, U, G} (T accepted as U). Digit scheme C=1, A=2, U=3, G=4;
/// the 5-adic number is digit(letter0) + 5 digit(letter1) + 25 digit(letter2),
/// always in [31, 124].
struct Codon {
    std::array<char, 3> letters;

    static Codon from_string(const std::string& s);
    std::string to_string() const { return std::string(letters.begin(), letters.end()); }
    bool operator==(const Codon&) const = default;
    auto operator<=>(const Codon&) const = default;
};

int nucleotide_digit(char letter);  // C=1, A=2, U/T=3, G=4

long encode_codon(const Codon& c);
Codon decode_codon(long n);

/// |n1 - n2|_5: 1/25 inside quadruplets, 1/5 within a column, 1 otherwise.
BigRat distance_5adic(const Codon& a, const Codon& b);
/// |n1 - n2|_2: 1/2 between doublet partners.
BigRat distance_2adic(const Codon& a, const Codon& b);

/// Positionwise sum of p-adic codon distances.
BigRat modified_hamming(const std::vector<Codon>& s1, const std::vector<Codon>& s2, long p);
/// Same for nucleotide sequences, using |digit difference|_p per position.
BigRat modified_hamming_nucleotides(const std::string& s1, const std::string& s2, long p);

/// Codon -> amino acid (three-letter code) or "Ter".
class CodeTable {
  public:
    static CodeTable vertebrate_mitochondrial();
    /// TSV rows: digits <tab> codon letters <tab> amino acid.
    static CodeTable from_tsv_text(const std::string& text);
    static CodeTable load_tsv(const std::string& path);

    const std::string& amino_acid(const Codon& c) const;
    const std::map<long, std::string>& entries() const { return by_number_; }
    std::vector<Codon> preimage(const std::string& amino_acid) const;

  private:
    std::map<long, std::string> by_number_;
};

struct DoubletReport {
    struct Doublet {
        Codon a, b;
        std::string amino_a, amino_b;
        bool consistent = false;
    };
    std::vector<Doublet> doublets;  // 32 for a full table
    long violations = 0;
};

/// Splits each 5-adic quadruplet (fixed first two letters) into its two
/// 2-adic doublets (third letter C/U and A/G) and checks each doublet codes a
/// single output.
DoubletReport doublet_degeneracy_check(const CodeTable& table);

/// 2-adic plane coordinates: nucleotide bits (row, col) with A=(0,0), G=(0,1),
/// U=(1,0), C=(1,1); x = col1 + 2 col2 + 4 col3, y = row1 + 2 row2 + 4 row3
/// (position 1 least significant).
struct PlanePoint {
    int x = 0;
    int y = 0;
};
PlanePoint two_adic_plane(const Codon& c);

struct PlaneReport {
    long codons_checked = 0;
    long mismatches = 0;
    std::vector<Codon> mismatched;
};

/// Verifies the code map on the 2-adic plane against the reference 4x4 table
/// (cells indexed by (y mod 4, x mod 4); split cells resolved by the third-
/// position row bit, unsplit cells independent of it).
PlaneReport plane_constancy_check(const CodeTable& table);

}  // namespace ultra
