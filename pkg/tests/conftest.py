import json
from pathlib import Path

import numpy as np
import pytest

import eitnoise as en

DATA = Path(__file__).parent / "data"


@pytest.fixture
def params():
    return en.MediumParams()


@pytest.fixture
def fig3_drive(params):
    """Equal unit Rabi frequencies, probe squeezed with xi = -3."""
    return en.drive_from_rabi(params, 1.0, 1.0, xi2=-3.0)


@pytest.fixture
def ctx(fig3_drive, params):
    return en.ClosedFormContext(fig3_drive, params)


@pytest.fixture(scope="session")
def baseline():
    return json.loads((DATA / "baseline.json").read_text())


def unpack_complex(obj):
    return np.asarray(obj["re"]) + 1j * np.asarray(obj["im"])


def baseline_case(data, gamma12):
    return next(c for c in data["cases"] if np.isclose(c["gamma12"], gamma12))
