"""Software and hardware counters around a workload.

Software counters come from the access layer (hints, suspensions, resumes,
blocks and records visited). Hardware cache counters are read through
py_perf_event when it is installed and the kernel allows it; otherwise they
are reported as unavailable and the workload still runs.
"""
import logging

from cbgraph.access.context import counter_scope

logger = logging.getLogger(__name__)


def _hardware_events():
    from py_perf_event import Cache, CacheId, CacheOp, CacheResult

    return [Cache(CacheId.LL, CacheOp.READ, CacheResult.ACCESS),
            Cache(CacheId.LL, CacheOp.READ, CacheResult.MISS),
            Cache(CacheId.L1D, CacheOp.READ, CacheResult.ACCESS),
            Cache(CacheId.L1D, CacheOp.READ, CacheResult.MISS)]


def counter_capture(scope, hardware=True):
    """
    Run ``scope()`` and collect counters for it

    Parameters
    ----------
    scope: callable
        Zero-argument workload.
    hardware: bool
        Try to read hardware cache counters (default True)

    Returns
    ----------
    dict
        * result: return value of ``scope``
        * software: access counters plus scheduler resumes and rounds
        * hardware: LLC and L1D read accesses and misses with the derived
          miss ratios, or ``{'status': 'unavailable', 'reason': ...}``
    """
    outcome = {}

    def body():
        outcome['started'] = True
        outcome['result'] = scope()

    with counter_scope() as software:
        counts = None
        reason = 'disabled'
        if hardware:
            try:
                from py_perf_event import measure
                counts = measure(_hardware_events(), body)
            except Exception as error:
                if 'started' in outcome:
                    raise
                reason = '{0}: {1}'.format(type(error).__name__, error)
                logger.debug("Hardware counters unavailable (%s)", reason)
        if 'started' not in outcome:
            body()

    if counts is None:
        hw = {'status': 'unavailable', 'reason': reason}
    else:
        ll_access, ll_miss, l1_access, l1_miss = (int(c) for c in counts)
        hw = {'status': 'ok', 'll_access': ll_access, 'll_miss': ll_miss,
              'l1d_access': l1_access, 'l1d_miss': l1_miss,
              'll_miss_ratio': ll_miss / ll_access if ll_access else 0.0,
              'l1d_miss_ratio': l1_miss / l1_access if l1_access else 0.0}
    return {'result': outcome['result'], 'software': software.to_dict(),
            'hardware': hw}
