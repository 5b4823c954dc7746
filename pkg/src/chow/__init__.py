"""Chow forms, R_V and linear-dependence tests"""
