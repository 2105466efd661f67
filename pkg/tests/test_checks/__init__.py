"""Test audit checks package"""
