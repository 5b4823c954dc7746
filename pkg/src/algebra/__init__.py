"""Parsing, substitution, evaluation and the sympy bridge"""
