#pragma once

#include "freeshift/patterns.hpp"

#include <set>
#include <vector>

namespace freeshift {

/// A window over {0,1} marking the subgroup generated by s0.
struct MarkedPointWindow {
    WindowConfig config;
    Letter s0;
};

/// χ of ⟨s0⟩ on B_k: 1 exactly on the powers of s0.
MarkedPointWindow chi_window(int rank, Letter s0, int radius);

struct SpecialSymbolSft {
    Sft x;
    /// proj[symbol] ∈ {0, 1}; only * maps to 1.
    std::vector<Symbol> proj;
    Symbol star;
    Letter s0;
};

/// Alphabet a, A, b, B, ... followed by "*", window B_1. Around a * the s0-axis
/// continues with * and every other neighbor gs reads s; around a letter s every
/// neighbor gt with t ≠ s⁻¹ reads t.
SpecialSymbolSft special_symbol_sft(int rank, Letter s0);

/// x0(g) = * on ⟨s0⟩ and the last letter of g elsewhere, on B_k.
WindowConfig x0_window(const SpecialSymbolSft& s, int radius);

/// Projection of every admissible B_k config through proj.
WindowLanguage projected_language(const SpecialSymbolSft& s, int radius);

/// B_k-patterns of the orbit closure of χ: the translates of χ on B_{k+slack}
/// that fit in the window, plus the all-zero limit pattern. slack < 0 means 2k.
WindowLanguage chi_orbit_language(int rank, Letter s0, int radius, int slack = -1);

/// Window-level checks of the three facts behind the lemma, over every
/// admissible B_k config. Empty when all hold.
std::vector<std::string> special_symbol_facts(const SpecialSymbolSft& s, int radius);

/// {g ∈ B_L : x(g·f) = u(f) for every f in supp(u)}. Throws std::invalid_argument
/// unless the domain of x contains B_{L + radius(supp u)}.
std::set<Word> return_set(const WindowConfig& x, const Pattern& u, int depth);

} // namespace freeshift
