int main()
{
    char s[2000];
    int p, n = 0, inside = 0;
    fgets(s, sizeof(s), stdin);
    for (p = 0; s[p] != '\0'; p++) {
        if (s[p] == ' ' || s[p] == '\n' || s[p] == '\t')
            inside = 0;
        else if (!inside) {
            inside = 1;
            n++;
        }
    }
    printf("%d\n", n);
    return 0;
}
