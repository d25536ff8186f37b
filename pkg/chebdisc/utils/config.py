import logging
import os

from chebdisc.base.exceptions import ParameterException

logger = logging.getLogger(__name__)

DEFAULT_MAX_NCAP = 512


def is_developer_mode() -> bool:
    """
    Check if developer mode is activated.

    :return: True if developer mode is active, otherwise False
    """
    return False if os.getenv("CHEBDISC_DEVELOPER_MODE") is None else True


def get_max_ncap() -> int:
    """
    Soft cap on the support size of exact evaluations, read from
    `CHEBDISC_MAX_NCAP`.

    :return: the configured cap, or `DEFAULT_MAX_NCAP` if undefined
    """
    value = os.getenv("CHEBDISC_MAX_NCAP")
    if value is None or value.strip() == "":
        return DEFAULT_MAX_NCAP
    try:
        cap = int(value)
    except ValueError:
        raise ParameterException(f"Invalid `CHEBDISC_MAX_NCAP`: `{value}`")
    if cap <= 0:
        raise ParameterException(f"`CHEBDISC_MAX_NCAP` must be positive, got {cap}")
    return cap


def warn_if_over_cap(Ncap: int) -> bool:
    """
    Log a warning if `Ncap` exceeds the soft cap. Evaluation proceeds regardless.

    :return: True if the cap was exceeded
    """
    cap = get_max_ncap()
    if Ncap > cap:
        logger.warning(f"`Ncap`={Ncap} exceeds soft cap {cap}; exact evaluation "
                       f"cost grows quadratically in the degree")
        return True
    return False
