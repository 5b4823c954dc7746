"""Handlers for the Chow form and linear dependence commands"""
import logging
from typing import Any, Dict, List, Optional

from ..chow.algebraic import algebraic_chow, kolchin_rv
from ..chow.dependence import lindep_test, sf_witness, verify_thm_5_4, witness_generators
from ..chow.elimination import GenericPoint, diff_chow, diff_chow_variety
from ..chow.properties import chow_property_suite
from ..dimension import dimension_polynomial
from ..errors import PreconditionError
from .base import BaseHandlers

logger = logging.getLogger(__name__)


def _single(values: Optional[List[str]], flag: str) -> Optional[str]:
    if values and len(values) > 1:
        raise PreconditionError(f"{flag} may be given only once for this command")
    return values[0] if values else None


class ChowHandlers(BaseHandlers):
    """chow, rv, lindep, witness, verify54"""

    def chow(self, args) -> Dict[str, Any]:
        config = self.config
        V = None
        if args.variety:
            V = self.variety(args.variety)
            if args.algebraic:
                chow = algebraic_chow(V, args.n, self.field, config.seed)
            else:
                chow = diff_chow_variety(V, self.field, config.max_order, config.max_degree)
        else:
            A = self.charset(args.charset, args.ranking)
            text = _single(args.point, "--point")
            if text is None:
                raise PreconditionError("chow needs --variety, or --charset with a generic --point")
            gp = GenericPoint.parse(text, self.session.require_ring(), dimension_polynomial(A).dim)
            chow = diff_chow(gp, A, config.max_order, config.max_degree)

        payload = chow.to_dict()
        if args.properties:
            payload['properties'] = chow_property_suite(chow, V, config.seed).to_dict()
        return payload

    def rv(self, args) -> Dict[str, Any]:
        V = self.variety(args.variety)
        return {'rv': kolchin_rv(V, args.n, self.field, self.config.seed).render()}

    def lindep(self, args) -> Dict[str, Any]:
        V = self.variety(args.variety)
        v = self.point(_single(args.point, "--point"))
        return lindep_test(V, v, self.config.guard, self.field).to_dict()

    def witness(self, args) -> Dict[str, Any]:
        """One --point per hyperplane block u_0..u_d"""
        config = self.config
        V = self.variety(args.variety)
        hyperplanes = [self.point(text) for text in args.point or ()]
        chow = diff_chow_variety(V, self.field, config.max_order, config.max_degree)
        return sf_witness(chow, hyperplanes, witness_generators(V, self.field), config.guard).to_dict()

    def verify54(self, args) -> Dict[str, Any]:
        config = self.config
        V = self.variety(args.variety)
        return {'verified': verify_thm_5_4(V, self.field, config.max_order, config.max_degree)}
