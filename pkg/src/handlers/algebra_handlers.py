"""Handlers for the reduction, homogeneity, projective and dimension commands"""
import logging
from typing import Any, Dict

from ..chow.algebraic import algebraic_generators
from ..chow.elimination import vdelta_charset
from ..dimension import dimension_polynomial, intersect_generic_hyperplane, intersect_generic_hyperplanes
from ..homogeneity import is_p_homogeneous
from ..models.reports import AFFINE, PROJECTIVE, VariableBlock
from ..models.ring import RingDescriptor
from ..projective import dehomogenize, dehomogenize_charset, homogenize, vdelta_generators
from ..reduction.charset import charset
from ..reduction.reduce import pseudo_remainder
from .base import BaseHandlers

logger = logging.getLogger(__name__)


class AlgebraHandlers(BaseHandlers):
    """reduce, charset, homog-check, homogenize, dehomogenize, vdelta, dimpoly, intersect"""

    def reduce(self, args) -> Dict[str, Any]:
        A = self.charset(args.charset, args.ranking)
        results = []
        for f in self.polynomials(args.inputs):
            result = pseudo_remainder(f, A.base, with_cofactors=args.cofactors)
            payload = result.to_dict()
            if args.cofactors:
                payload['cofactors'] = [
                    {'element': k, 'derivative': e, 'cofactor': c.render()}
                    for (k, e), c in sorted(result.cofactors.items())
                ]
            results.append(payload)
        return results[0] if len(results) == 1 else {'results': results}

    def compute_charset(self, args) -> Dict[str, Any]:
        generators = self.polynomials(args.inputs)
        return charset(generators, self.ranking(args.ranking)).to_dict()

    def homog_check(self, args) -> Dict[str, Any]:
        blocks = [VariableBlock.parse(text) for text in (args.block or ["Y"])]
        reports = [is_p_homogeneous(f, blocks) for f in self.polynomials(args.inputs)]
        if len(reports) == 1 and len(blocks) == 1:
            return reports[0][0].to_dict()
        return {'reports': [[r.to_dict() for r in per_poly] for per_poly in reports]}

    def homogenize(self, args) -> Dict[str, Any]:
        results = [homogenize(r).to_dict() for r in self.polynomials(args.inputs)]
        return results[0] if len(results) == 1 else {'results': results}

    def dehomogenize(self, args) -> Dict[str, Any]:
        if args.charset:
            return dehomogenize_charset(self.charset(args.charset, args.ranking)).to_dict()
        images = [dehomogenize(p).render() for p in self.polynomials(args.inputs)]
        return {'polynomial': images[0]} if len(images) == 1 else {'polynomials': images}

    def vdelta(self, args) -> Dict[str, Any]:
        V = self.variety(args.variety)
        ring = RingDescriptor(y_count=V.arity, field=self.field)
        generators = vdelta_generators(algebraic_generators(V, ring), V.n, ring)
        A = vdelta_charset(V, self.field)
        return {
            'generators': [g.render() for g in generators],
            'charset': A.base.render(),
            'dimension': dimension_polynomial(A).to_dict(),
        }

    def dimpoly(self, args) -> Dict[str, Any]:
        A = self.charset(args.charset, args.ranking)
        return dimension_polynomial(A, AFFINE if args.affine else PROJECTIVE).to_dict()

    def intersect(self, args) -> Dict[str, Any]:
        A = self.charset(args.charset, args.ranking)
        if args.count == 1:
            return intersect_generic_hyperplane(A, affine=args.affine).to_dict()
        steps = intersect_generic_hyperplanes(A, args.count, affine=args.affine)
        return {'steps': [step.to_dict() for step in steps]}
