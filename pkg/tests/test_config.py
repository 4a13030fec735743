"""Environment defaults, YAML run files and RunConfig validation."""

from __future__ import annotations

import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from src.config import get_numerics_config, get_output_config, get_repo_root, load_run_file
from src.errors import ConfigError
from src.models.greens import SplitMethod
from src.models.run_config import OutputFormat, RunConfig
from src.models.spectrum import Regulator, RegulatorKind
from src.models.zeropoint import FieldKind


# ===========================================================================
# 1. Environment
# ===========================================================================

class TestNumericsConfig(unittest.TestCase):
    def test_defaults(self):
        with patch.dict(os.environ, {}, clear=True):
            num = get_numerics_config()
        self.assertEqual(num.nu_max, 0.99)
        self.assertEqual(num.endpoint_eps, 1e-9)
        self.assertEqual(num.epsilons, (0.2, 0.1, 0.05))
        self.assertEqual(num.dt_sequence, (0.2, 0.1, 0.05, 0.025))
        self.assertEqual(num.richardson_order, 2)

    def test_environment_overrides(self):
        env = {
            "ROTVAC_NU_MAX": "0.5",
            "ROTVAC_EPSILONS": "0.4, 0.2",
            "ROTVAC_RICHARDSON_ORDER": "3",
        }
        with patch.dict(os.environ, env, clear=True):
            num = get_numerics_config()
        self.assertEqual(num.nu_max, 0.5)
        self.assertEqual(num.epsilons, (0.4, 0.2))
        self.assertEqual(num.richardson_order, 3)

    def test_bad_number_raises(self):
        with patch.dict(os.environ, {"ROTVAC_JUMP_TOL": "tiny"}, clear=True):
            with self.assertRaises(ConfigError):
                get_numerics_config()

    def test_bad_ladder_raises(self):
        with patch.dict(os.environ, {"ROTVAC_DT_SEQUENCE": "0.2,x"}, clear=True):
            with self.assertRaises(ConfigError):
                get_numerics_config()

    def test_output_config(self):
        with patch.dict(os.environ, {"ROTVAC_LOG_LEVEL": "debug"}, clear=True):
            out = get_output_config()
        self.assertEqual(out.log_level, "DEBUG")
        self.assertEqual(out.float_format, ".17g")

    def test_repo_root_holds_src(self):
        self.assertTrue((get_repo_root() / "src" / "config.py").exists())


# ===========================================================================
# 2. Run files
# ===========================================================================

class TestRunFile(unittest.TestCase):
    def _write(self, text: str) -> Path:
        tmp = tempfile.NamedTemporaryFile("w", suffix=".yaml", delete=False, encoding="utf-8")
        tmp.write(text)
        tmp.close()
        self.addCleanup(os.unlink, tmp.name)
        return Path(tmp.name)

    def test_dashes_become_underscores(self):
        path = self._write("i-cl-hat: 9000\nbeta: 100\nnu_max: 0.05\n")
        data = load_run_file(path)
        self.assertEqual(data, {"i_cl_hat": 9000, "beta": 100, "nu_max": 0.05})

    def test_empty_file_is_empty_mapping(self):
        self.assertEqual(load_run_file(self._write("")), {})

    def test_list_document_rejected(self):
        with self.assertRaises(ConfigError):
            load_run_file(self._write("- 1\n- 2\n"))

    def test_invalid_yaml_rejected(self):
        with self.assertRaises(ConfigError):
            load_run_file(self._write("beta: [1, 2\n"))

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            load_run_file("/nonexistent/run.yaml")


# ===========================================================================
# 3. RunConfig
# ===========================================================================

class TestRunConfig(unittest.TestCase):
    def test_default_grid_has_501_points(self):
        self.assertEqual(RunConfig.build().n_grid, 501)

    def test_enum_coercion(self):
        cfg = RunConfig.build(field="neutral", regulator="exp-cutoff", split_method="stencil", format="csv")
        self.assertIs(cfg.field, FieldKind.NEUTRAL)
        self.assertIs(cfg.regulator, RegulatorKind.EXP_CUTOFF)
        self.assertIs(cfg.split_method, SplitMethod.STENCIL)
        self.assertIs(cfg.format, OutputFormat.CSV)

    def test_none_values_fall_back_to_defaults(self):
        cfg = RunConfig.build(beta=None, nu_max=None)
        self.assertEqual(cfg.beta, 0.0)
        self.assertEqual(cfg.nu_max, 0.99)

    def test_empty_range_rejected(self):
        with self.assertRaises(ConfigError):
            RunConfig.build(nu_start=0.04, nu_stop=0.01)

    def test_range_beyond_cap_rejected_on_use(self):
        cfg = RunConfig.build(nu_stop=0.05, nu_max=0.05)
        with self.assertRaises(ConfigError):
            cfg.check_grid()
        RunConfig.build(nu_stop=0.04, nu_max=0.05).check_grid()

    def test_output_path_not_in_dict(self):
        self.assertNotIn("output", RunConfig.build(output="a.csv").to_dict())

    def test_superluminal_cap_rejected(self):
        with self.assertRaises(ConfigError):
            RunConfig.build(nu_max=1.0)

    def test_negative_inertia_rejected(self):
        with self.assertRaises(ConfigError):
            RunConfig.build(i_cl_hat=-1.0)

    def test_non_positive_step_rejected(self):
        with self.assertRaises(ConfigError):
            RunConfig.build(nu_step=0.0)

    def test_unknown_key_rejected(self):
        with self.assertRaises(ConfigError):
            RunConfig.build(colour="red")

    def test_ring_requires_radius(self):
        with self.assertRaises(ConfigError):
            RunConfig.build().ring()

    def test_ring_from_si_fields(self):
        ring = RunConfig.build(radius_si=1e-6, b_field_si=10.0, charge_quanta=2).ring()
        self.assertEqual(ring.radius_si, 1e-6)
        self.assertEqual(ring.charge_quanta, 2)

    def test_to_dict_is_json_ready(self):
        data = RunConfig.build(field="neutral").to_dict()
        self.assertEqual(data["field"], "neutral")
        self.assertEqual(data["epsilons"], [0.2, 0.1, 0.05])


class TestRegulator(unittest.TestCase):
    def test_from_name(self):
        reg = Regulator.from_name("exp-cutoff", (0.2, 0.1))
        self.assertIs(reg.kind, RegulatorKind.EXP_CUTOFF)

    def test_unknown_name(self):
        with self.assertRaises(ConfigError):
            Regulator.from_name("zeta")

    def test_non_decreasing_ladder(self):
        with self.assertRaises(ConfigError):
            Regulator(kind=RegulatorKind.EXP_CUTOFF, epsilons=(0.1, 0.2))

    def test_epsilon_out_of_range(self):
        with self.assertRaises(ConfigError):
            Regulator(kind=RegulatorKind.EXP_CUTOFF, epsilons=(2.0,))

    def test_order_at_least_one(self):
        with self.assertRaises(ConfigError):
            Regulator(richardson_order=0)
