int main()
{
    char str[1000], c;
    int v = 0, k = 0;
    gets(str);
    for (; str[k]; k++) {
        c = tolower(str[k]);
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u')
            v++;
    }
    printf("%d\n", v);
    return 0;
}
