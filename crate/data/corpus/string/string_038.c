int main()
{
    char s[2000];
    int i, n = 0, state = 0;
    fgets(s, sizeof(s), stdin);
    for (i = 0; s[i] != '\0'; i++) {
        if (s[i] == ' ' || s[i] == '\n' || s[i] == '\t')
            state = 0;
        else if (!state) {
            state = 1;
            n++;
        }
    }
    printf("%d\n", n);
    return 0;
}
