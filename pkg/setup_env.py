#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Environment Setup Script for monocheck

This script creates a virtual environment next to the sources, installs the
dependencies from requirements.txt and writes a run script that forwards its
arguments to main.py.
"""

import os
import platform
import subprocess
import sys


def main():
    """
    Set up the Python environment with the required dependencies.
    """
    print("=" * 80)
    print("monocheck - Environment Setup")
    print("=" * 80)
    print("\nThis script will set up a Python virtual environment with the required dependencies.")

    python_version = f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}"
    print(f"\nCurrent Python version: {python_version}")
    if sys.version_info < (3, 8):
        print("ERROR: Python 3.8 or newer is required.")
        return 1

    os_name = platform.system()
    print(f"Operating System: {os_name}")

    try:
        subprocess.check_call([sys.executable, "-m", "pip", "--version"])
    except subprocess.CalledProcessError:
        print("\nERROR: pip is not installed. Please install pip first.")
        return 1

    response = input("\nDo you want to create a virtual environment and install dependencies? (y/n): ")
    if response.lower() != 'y':
        print("Setup canceled.")
        return 0

    base_dir = os.path.dirname(os.path.abspath(__file__))
    venv_dir = os.path.join(base_dir, "venv")

    if os.path.exists(venv_dir):
        response = input(f"\nVirtual environment directory already exists at {venv_dir}. Overwrite? (y/n): ")
        if response.lower() != 'y':
            print("Setup canceled.")
            return 0

    print(f"\nCreating virtual environment in {venv_dir}...")

    try:
        subprocess.check_call([sys.executable, "-m", "venv", venv_dir])
        print("Virtual environment created successfully.")

        if os_name == "Windows":
            python_exe = os.path.join(venv_dir, "Scripts", "python.exe")
        else:
            python_exe = os.path.join(venv_dir, "bin", "python")

        print("\nUpgrading pip...")
        subprocess.check_call([python_exe, "-m", "pip", "install", "--upgrade", "pip"])

        # gmpy2 ships wheels for the common platforms; a failure here usually
        # means GMP/MPFR development headers are missing
        print("\nInstalling dependencies...")
        requirements = os.path.join(base_dir, "requirements.txt")
        subprocess.check_call([python_exe, "-m", "pip", "install", "-r", requirements])

        if os_name == "Windows":
            run_script = os.path.join(base_dir, "run.bat")
            with open(run_script, 'w') as f:
                f.write('@echo off\n')
                f.write(f'call "{os.path.join(venv_dir, "Scripts", "activate.bat")}"\n')
                f.write(f'python "{os.path.join(base_dir, "main.py")}" %*\n')
        else:
            run_script = os.path.join(base_dir, "run.sh")
            with open(run_script, 'w') as f:
                f.write('#!/bin/bash\n')
                f.write(f'source "{os.path.join(venv_dir, "bin", "activate")}"\n')
                f.write(f'exec python "{os.path.join(base_dir, "main.py")}" "$@"\n')
            os.chmod(run_script, 0o755)

        print(f"\nCreated run script: {run_script}")
        print("Example: run.sh analyze \"x^2-x-1\" --k 6")
        print("Run the test suite with: python -m pytest")
        print("\nEnvironment setup completed successfully!")
        return 0

    except subprocess.CalledProcessError as e:
        print(f"\nERROR: Setup failed: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
