"""
This module offers the verifications that cross-check independent oracles (brute force enumeration, recurrences,
hook lengths, Robinson-Schensted, exact Gram ranks and strand diagrams) against each other, and the report type
they produce.
"""

from collections import OrderedDict
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

OracleValues = Union[Mapping[str, int], Iterable[Tuple[str, int]]]

__all__ = ['verifications']


class CensusReport:
    """Outcome of one verification

    Args:
        claim: Name of the verified claim, e.g. 'theorem'
        params: Parameters the claim was checked for, e.g. {'k': 3}
        values: Oracle name to computed integer, in the order the oracles ran
        groups: Lists of oracle names whose values have to agree; all values form one group if None
        problems: Internal consistency failures found while computing the values
    """

    def __init__(self,
                 claim: str,
                 params: Mapping[str, int],
                 values: OracleValues,
                 groups: Optional[Sequence[Sequence[str]]] = None,
                 problems: Optional[Sequence[str]] = None) -> None:
        self.claim: str = claim
        self.params: Dict[str, int] = OrderedDict(params)
        self.values: Dict[str, int] = OrderedDict(values)
        self.groups: List[List[str]] = [list(g) for g in groups] if groups is not None else [list(self.values)]
        self.problems: List[str] = list(problems or [])
        for group in self.groups:
            for name in group:
                if name not in self.values:
                    raise KeyError('Comparison group refers to unknown oracle {}'.format(name))

    @property
    def passed(self) -> bool:
        return not self.problems and all(len({self.values[name] for name in group}) <= 1 for group in self.groups)

    def to_dict(self) -> Dict[str, Any]:
        """{claim, params, values, passed} with the values as strings"""
        return {
            'claim': self.claim,
            'params': dict(self.params),
            'values': {name: str(value) for name, value in self.values.items()},
            'passed': self.passed
        }

    def __repr__(self) -> str:
        params = ', '.join('{}={}'.format(k, v) for k, v in self.params.items())
        return 'CensusReport[{}({}) {}]'.format(self.claim, params, 'PASS' if self.passed else 'FAIL')
