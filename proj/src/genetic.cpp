#include "ultrametra/genetic.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ultra {

namespace {

const char* kVertebrateMitochondrialTsv =
    "111\tCCC\tPro\n112\tCCA\tPro\n113\tCCU\tPro\n114\tCCG\tPro\n"
    "211\tACC\tThr\n212\tACA\tThr\n213\tACU\tThr\n214\tACG\tThr\n"
    "311\tUCC\tSer\n312\tUCA\tSer\n313\tUCU\tSer\n314\tUCG\tSer\n"
    "411\tGCC\tAla\n412\tGCA\tAla\n413\tGCU\tAla\n414\tGCG\tAla\n"
    "121\tCAC\tHis\n122\tCAA\tGln\n123\tCAU\tHis\n124\tCAG\tGln\n"
    "221\tAAC\tAsn\n222\tAAA\tLys\n223\tAAU\tAsn\n224\tAAG\tLys\n"
    "321\tUAC\tTyr\n322\tUAA\tTer\n323\tUAU\tTyr\n324\tUAG\tTer\n"
    "421\tGAC\tAsp\n422\tGAA\tGlu\n423\tGAU\tAsp\n424\tGAG\tGlu\n"
    "131\tCUC\tLeu\n132\tCUA\tLeu\n133\tCUU\tLeu\n134\tCUG\tLeu\n"
    "231\tAUC\tIle\n232\tAUA\tMet\n233\tAUU\tIle\n234\tAUG\tMet\n"
    "331\tUUC\tPhe\n332\tUUA\tLeu\n333\tUUU\tPhe\n334\tUUG\tLeu\n"
    "431\tGUC\tVal\n432\tGUA\tVal\n433\tGUU\tVal\n434\tGUG\tVal\n"
    "141\tCGC\tArg\n142\tCGA\tArg\n143\tCGU\tArg\n144\tCGG\tArg\n"
    "241\tAGC\tSer\n242\tAGA\tTer\n243\tAGU\tSer\n244\tAGG\tTer\n"
    "341\tUGC\tCys\n342\tUGA\tTrp\n343\tUGU\tCys\n344\tUGG\tTrp\n"
    "441\tGGC\tGly\n442\tGGA\tGly\n443\tGGU\tGly\n444\tGGG\tGly\n";

char canonical(char c) {
    switch (c) {
        case 'C': case 'A': case 'G': case 'U': return c;
        case 'T': return 'U';
        case 'c': return 'C';
        case 'a': return 'A';
        case 'g': return 'G';
        case 'u': case 't': return 'U';
        default: throw std::invalid_argument(std::string("invalid nucleotide: ") + c);
    }
}

char digit_letter(int d) {
    switch (d) {
        case 1: return 'C';
        case 2: return 'A';
        case 3: return 'U';
        case 4: return 'G';
        default: throw std::invalid_argument("invalid codon digit");
    }
}

BigRat padic_norm_of_difference(long n1, long n2, long p) {
    long d = n1 - n2;
    if (d == 0) return BigRat(0);
    if (d < 0) d = -d;
    long v = 0;
    while (d % p == 0) {
        d /= p;
        ++v;
    }
    return pow_rat(p, -v);
}

// nucleotide bits (row, col): A=(0,0), G=(0,1), U=(1,0), C=(1,1)
void nucleotide_bits(char letter, int& row, int& col) {
    switch (canonical(letter)) {
        case 'A': row = 0; col = 0; break;
        case 'G': row = 0; col = 1; break;
        case 'U': row = 1; col = 0; break;
        case 'C': row = 1; col = 1; break;
    }
}

// Reference 4x4 plane table, rows indexed by y mod 4 (top = 0), columns by
// x mod 4; "top/bottom" split cells are resolved by the third-position row bit
// (0 selects the top entry). Unsplit cells repeat the same name.
const char* kPlaneTable[4][4][2] = {
    {{"Lys", "Asn"}, {"Glu", "Asp"}, {"Ter", "Ser"}, {"Gly", "Gly"}},
    {{"Ter", "Tyr"}, {"Gln", "His"}, {"Trp", "Cys"}, {"Arg", "Arg"}},
    {{"Met", "Ile"}, {"Val", "Val"}, {"Thr", "Thr"}, {"Ala", "Ala"}},
    {{"Leu", "Phe"}, {"Leu", "Leu"}, {"Ser", "Ser"}, {"Pro", "Pro"}},
};

}  // namespace

int nucleotide_digit(char letter) {
    switch (canonical(letter)) {
        case 'C': return 1;
        case 'A': return 2;
        case 'U': return 3;
        default: return 4;  // G
    }
}

Codon Codon::from_string(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("codon must have three letters");
    Codon c;
    for (int i = 0; i < 3; ++i) c.letters[i] = canonical(s[i]);
    return c;
}

long encode_codon(const Codon& c) {
    long n = 0, w = 1;
    for (int i = 0; i < 3; ++i) {
        n += nucleotide_digit(c.letters[i]) * w;
        w *= 5;
    }
    return n;
}

Codon decode_codon(long n) {
    if (n < 31 || n > 124) throw std::invalid_argument("codon number out of range [31,124]");
    Codon c;
    for (int i = 0; i < 3; ++i) {
        c.letters[i] = digit_letter(static_cast<int>(n % 5));
        n /= 5;
    }
    if (n != 0) throw std::invalid_argument("codon number not decodable");
    return c;
}

BigRat distance_5adic(const Codon& a, const Codon& b) {
    return padic_norm_of_difference(encode_codon(a), encode_codon(b), 5);
}

BigRat distance_2adic(const Codon& a, const Codon& b) {
    return padic_norm_of_difference(encode_codon(a), encode_codon(b), 2);
}

BigRat modified_hamming(const std::vector<Codon>& s1, const std::vector<Codon>& s2, long p) {
    if (s1.size() != s2.size()) throw std::invalid_argument("modified_hamming: length mismatch");
    BigRat d = 0;
    for (size_t i = 0; i < s1.size(); ++i)
        d += padic_norm_of_difference(encode_codon(s1[i]), encode_codon(s2[i]), p);
    return d;
}

BigRat modified_hamming_nucleotides(const std::string& s1, const std::string& s2, long p) {
    if (s1.size() != s2.size()) throw std::invalid_argument("modified_hamming: length mismatch");
    BigRat d = 0;
    for (size_t i = 0; i < s1.size(); ++i)
        d += padic_norm_of_difference(nucleotide_digit(s1[i]), nucleotide_digit(s2[i]), p);
    return d;
}

CodeTable CodeTable::vertebrate_mitochondrial() {
    return from_tsv_text(kVertebrateMitochondrialTsv);
}

CodeTable CodeTable::from_tsv_text(const std::string& text) {
    CodeTable t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string digits, letters, amino;
        if (!std::getline(ls, digits, '\t') || !std::getline(ls, letters, '\t') ||
            !std::getline(ls, amino))
            throw std::invalid_argument("code table: malformed row: " + line);
        while (!amino.empty() && (amino.back() == '\r' || amino.back() == ' '))
            amino.pop_back();
        Codon c = Codon::from_string(letters);
        long n = encode_codon(c);
        // the digit column is redundant but must agree with the letters
        long stated = 0, w = 1;
        for (char ch : digits) {
            if (ch < '1' || ch > '4') throw std::invalid_argument("code table: bad digit column");
            stated += (ch - '0') * w;
            w *= 5;
        }
        if (stated != n) throw std::invalid_argument("code table: digits disagree with letters");
        if (!t.by_number_.emplace(n, amino).second)
            throw std::invalid_argument("code table: duplicate codon " + letters);
    }
    if (t.by_number_.size() != 64) throw std::invalid_argument("code table: expected 64 codons");
    return t;
}

CodeTable CodeTable::load_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code table: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_tsv_text(ss.str());
}

const std::string& CodeTable::amino_acid(const Codon& c) const {
    auto it = by_number_.find(encode_codon(c));
    if (it == by_number_.end()) throw std::invalid_argument("codon not in table");
    return it->second;
}

std::vector<Codon> CodeTable::preimage(const std::string& amino_acid) const {
    std::vector<Codon> out;
    for (const auto& [n, aa] : by_number_)
        if (aa == amino_acid) out.push_back(decode_codon(n));
    return out;
}

DoubletReport doublet_degeneracy_check(const CodeTable& table) {
    DoubletReport rep;
    for (int d0 = 1; d0 <= 4; ++d0) {
        for (int d1 = 1; d1 <= 4; ++d1) {
            // quadruplet: third digit 1..4; 2-adic doublets pair C(1) with
            // U(3) and A(2) with G(4)
            for (auto [ta, tb] : {std::pair<int, int>{1, 3}, std::pair<int, int>{2, 4}}) {
                DoubletReport::Doublet db;
                db.a = decode_codon(d0 + 5 * d1 + 25 * ta);
                db.b = decode_codon(d0 + 5 * d1 + 25 * tb);
                db.amino_a = table.amino_acid(db.a);
                db.amino_b = table.amino_acid(db.b);
                db.consistent = (db.amino_a == db.amino_b);
                if (!db.consistent) ++rep.violations;
                rep.doublets.push_back(std::move(db));
            }
        }
    }
    return rep;
}

PlanePoint two_adic_plane(const Codon& c) {
    PlanePoint pt;
    for (int i = 0; i < 3; ++i) {
        int row = 0, col = 0;
        nucleotide_bits(c.letters[i], row, col);
        pt.x |= col << i;
        pt.y |= row << i;
    }
    return pt;
}

PlaneReport plane_constancy_check(const CodeTable& table) {
    PlaneReport rep;
    for (const auto& [n, aa] : table.entries()) {
        Codon c = decode_codon(n);
        PlanePoint pt = two_adic_plane(c);
        int half = (pt.y >> 2) & 1;  // third-position row bit resolves split cells
        const char* expected = kPlaneTable[pt.y % 4][pt.x % 4][half];
        ++rep.codons_checked;
        if (aa != expected) {
            ++rep.mismatches;
            rep.mismatched.push_back(c);
        }
    }
    return rep;
}

}  // namespace ultra
