// Expression grammar
//   expr    := term (('+'|'-') term)*
//   term    := ('+'|'-')? product ('@' product)?
//   product := power (('*'|'/')? power)*       juxtaposition is a product
//   power   := atom ('^' nat)?
//   atom    := number | name | '(' expr ')'
// Names are the alphabet's generators (longest match, so "v+" and "v-" work),
// the imaginary unit "i", the scalar variable (alphabet param) and any extra
// atoms the caller allows (e.g. "t" for the contraction variable).
#pragma once

#include "qc/ncpoly.hpp"

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

struct ParseError : std::runtime_error {
    int pos;
    ParseError(const std::string& msg, int p) : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct Node {
    enum Kind { Num, Imag, Atom, Gen_, Add, Sub, Neg, Mul, Div, Pow, Tensor } kind;
    mpz_class num;
    std::string atom;
    int gen = -1;
    int exp = 0;
    int pos = 0;
    std::unique_ptr<Node> l, r;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr parse_ast(const std::string& text, const Alphabet& al, const std::vector<std::string>& extra_atoms = {});

// evaluate with any ring type providing the operations used below
template <class R>
typename R::Value eval_ast(const Node& n, const R& ring) {
    using V = typename R::Value;
    switch (n.kind) {
        case Node::Num: return ring.number(n.num);
        case Node::Imag: return ring.imag();
        case Node::Atom: return ring.atom(n.atom, n.pos);
        case Node::Gen_: return ring.gen(static_cast<Gen>(n.gen));
        case Node::Add: return ring.add(eval_ast(*n.l, ring), eval_ast(*n.r, ring));
        case Node::Sub: return ring.sub(eval_ast(*n.l, ring), eval_ast(*n.r, ring));
        case Node::Neg: return ring.neg(eval_ast(*n.l, ring));
        case Node::Mul: return ring.mul(eval_ast(*n.l, ring), eval_ast(*n.r, ring));
        case Node::Div: return ring.div(eval_ast(*n.l, ring), eval_ast(*n.r, ring), n.pos);
        case Node::Pow: {
            V b = eval_ast(*n.l, ring);
            V r = ring.number(1);
            for (int k = 0; k < n.exp; ++k) r = ring.mul(r, b);
            return r;
        }
        case Node::Tensor: return ring.tensor(*n.l, *n.r, n.pos);
    }
    throw ParseError("bad node", n.pos);
}

NCPoly parse(const std::string& text, const Alphabet& al);
TensorPoly parse_tensor(const std::string& text, const Alphabet& al);
Scalar parse_scalar(const std::string& text, const std::string& var = "k");

}  // namespace qc
